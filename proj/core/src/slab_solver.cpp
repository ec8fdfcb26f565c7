#include "slabtrans/slab_solver.hpp"

#include <cmath>
#include <stdexcept>

namespace slabtrans {

void SlabProblem::validate() const {
  if (!(thickness > 0.0) || !std::isfinite(thickness))
    throw std::domain_error("SlabProblem: thickness must be positive");
  if (!(anisotropy > -1.0 && anisotropy < 1.0))
    throw std::domain_error("SlabProblem: anisotropy must lie in (-1, 1)");
  if (!(mu0 > 0.0 && mu0 <= 1.0))
    throw std::domain_error("SlabProblem: mu0 must lie in (0, 1]");
}

ThickSlabSolver::ThickSlabSolver(const XFunction& x, const Quadrature& q)
    : x_(x), z0_(gamma_moments(x, q).gamma1) {}

AsymptoticSolution ThickSlabSolver::solve(const SlabProblem& p) const {
  p.validate();

  // Adding/subtracting the two half-range-projected boundary conditions gives
  //   (3/2) mu0 / X(-mu0) = a_s - (3/2) j D (1 - g1)
  //   (3/2) mu0 / X(-mu0) = 3 j z0 + (3/2) j D (1 - g1)
  // once terms of order exp(-D) are dropped.
  const double ratio = p.mu0 / x_.at(p.mu0);
  const double dg = p.thickness * (1.0 - p.anisotropy);
  const double j = ratio / (dg + 2.0 * z0_);
  const double a_s = 1.5 * ratio + 1.5 * j * dg;

  AsymptoticSolution s;
  s.problem = p;
  s.iso_amplitude = a_s;
  s.current_amplitude = j;
  s.extrapolation_length = z0_;
  return s;
}

DensitySample interior_density(const AsymptoticSolution& s, double z, double mu) {
  const double d = s.problem.thickness;
  if (!(z >= 0.0 && z <= d))
    throw std::domain_error("interior_density: z must lie in [0, D]");
  if (!(mu >= -1.0 && mu <= 1.0))
    throw std::domain_error("interior_density: mu must lie in [-1, 1]");

  DensitySample out;
  out.value = s.iso_amplitude +
              3.0 * s.current_amplitude * (mu - z * (1.0 - s.problem.anisotropy));
  out.in_boundary_layer = std::min(z, d - z) < kBoundaryLayerWidth;
  return out;
}

ScalarSample scalar_profile(const AsymptoticSolution& s, double z) {
  const double d = s.problem.thickness;
  if (!(z >= 0.0 && z <= d))
    throw std::domain_error("scalar_profile: z must lie in [0, D]");

  ScalarSample out;
  out.density = 2.0 * s.iso_amplitude -
                6.0 * s.current_amplitude * z * (1.0 - s.problem.anisotropy);
  out.net_current = 2.0 * s.current_amplitude;
  out.in_boundary_layer = std::min(z, d - z) < kBoundaryLayerWidth;
  return out;
}

}  // namespace slabtrans
