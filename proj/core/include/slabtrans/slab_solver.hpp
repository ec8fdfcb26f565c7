#pragma once

#include "slabtrans/quadrature.hpp"
#include "slabtrans/special_functions.hpp"

namespace slabtrans {

/// Distance (in mean free paths) from a face inside which the asymptotic
/// interior solution omits boundary-layer modes and is flagged as such.
inline constexpr double kBoundaryLayerWidth = 3.0;

/// Thickness below which dropped exp(-D) terms stop being negligible; the
/// solution is still evaluable but carries thick_slab_valid = false.
inline constexpr double kThickSlabThreshold = 5.0;

/// A slab of optical thickness D with conservative, linearly anisotropic
/// scattering and a mono-directional beam entering at z = 0.
struct SlabProblem {
  double thickness = 10.0;   // D, in mean free paths
  double anisotropy = 0.0;   // g1, first moment of the scattering kernel
  double mu0 = 1.0;          // incidence cosine, in (0, 1]

  void validate() const;  // throws std::domain_error
  bool thick_slab_valid() const { return thickness >= kThickSlabThreshold; }
};

/// Interior solution of the thick-slab problem:
///   f(z, mu) = iso_amplitude + 3 * current_amplitude * (mu - z (1 - g1)),
/// with boundary-layer modes dropped.  transmission() is the current
/// amplitude j; the per-incident-particle transmitted fraction is j / mu0
/// (the slab conserves particles, so the net current 2j equals the incident
/// current 2 mu0 times the transmitted fraction).
struct AsymptoticSolution {
  SlabProblem problem;
  double iso_amplitude = 0.0;         // a_s
  double current_amplitude = 0.0;     // j
  double extrapolation_length = 0.0;  // z0, the gamma1 moment

  double transmission() const { return current_amplitude; }
  double transmitted_fraction() const { return current_amplitude / problem.mu0; }
};

struct DensitySample {
  double value = 0.0;
  bool in_boundary_layer = false;
};

struct ScalarSample {
  double density = 0.0;      // rho(z) = 2 a_s - 6 j z (1 - g1)
  double net_current = 0.0;  // 2 j, independent of z
  bool in_boundary_layer = false;
};

/// Solves the two-equation thick-slab system for a_s and j.  z0 is computed
/// once at construction as the gamma1 moment of the supplied conservative
/// X-function, never hard-coded.
class ThickSlabSolver {
 public:
  explicit ThickSlabSolver(const XFunction& x,
                           const Quadrature& q = {1e-10, 1e-10, 256, 31});

  AsymptoticSolution solve(const SlabProblem& p) const;
  double transmission(const SlabProblem& p) const { return solve(p).current_amplitude; }
  double z0() const { return z0_; }

 private:
  const XFunction& x_;
  double z0_;
};

/// Angular density at depth z and direction cosine mu; flags samples inside
/// a boundary layer where the accuracy contract does not hold.
DensitySample interior_density(const AsymptoticSolution& s, double z, double mu);

/// mu-integrated density and net current at depth z.
ScalarSample scalar_profile(const AsymptoticSolution& s, double z);

}  // namespace slabtrans
