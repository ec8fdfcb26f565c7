#include "slabtrans/eigenfunctions.hpp"

#include <cmath>
#include <stdexcept>

namespace slabtrans {

double phi_regular(double nu, double mu) {
  const double abs_nu = std::abs(nu);
  if (!(abs_nu > 0.0 && abs_nu <= 1.0))
    throw std::domain_error("phi_regular: eigenvalue must satisfy 0 < |nu| <= 1");
  if (!(mu >= -1.0 && mu <= 1.0))
    throw std::domain_error("phi_regular: mu must lie in [-1, 1]");
  if (mu == nu)
    throw std::domain_error(
        "phi_regular: undefined at mu == nu; use pair_phi for the distributional part");
  return 0.5 * nu / (nu - mu);
}

double pair_phi(double nu, const std::function<double(double)>& w,
                const Quadrature& q) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::domain_error("pair_phi: nu must lie strictly inside (0, 1)");
  IntegralResult pv = integrate_pv(w, 0.0, 1.0, nu, q);
  if (!pv.converged)
    throw std::runtime_error("pair_phi: principal-value quadrature did not converge");
  return 0.5 * nu * pv.value + lambda_fn(nu) * w(nu);
}

double pair_phi_neg(double nu, const std::function<double(double)>& w,
                    const Quadrature& q) {
  if (!(nu > 0.0 && nu <= 1.0))
    throw std::domain_error("pair_phi_neg: nu must lie in (0, 1]");
  IntegralResult r = integrate(
      [&w, nu](double mu) { return w(mu) / (nu + mu); }, 0.0, 1.0, q);
  if (!r.converged)
    throw std::runtime_error("pair_phi_neg: quadrature did not converge");
  return 0.5 * nu * r.value;
}

}  // namespace slabtrans
