#pragma once

#include <functional>

namespace slabtrans {

/// Tolerances and budget for the adaptive integration engine.
///
/// The base rule is a nested Fejer-2 (open) rule: its nodes avoid the
/// interval endpoints, so integrable endpoint singularities can be fed to
/// integrate() directly, and the embedded half-order rule reuses the same
/// evaluations for the per-interval error estimate.
struct Quadrature {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 64;   // interval bisections before giving up
  int base_rule_points = 31;   // points per interval; must be odd, >= 3

  void validate() const;  // throws std::invalid_argument on a bad setup
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;  // non-negative
  long long evaluations = 0;
  bool converged = false;  // error_estimate <= max(abs_tol, rel_tol*|value|)
};

using Integrand = std::function<double(double)>;

/// Integrand for integrals with a singular factor at x = 1.  The engine calls
/// f(x, one_minus_x) with one_minus_x carrying full relative precision even
/// when x rounds to 1; factors such as ln(1-x) or 1/(1-x) must be computed
/// from the second argument.
using EndpointIntegrand = std::function<double(double, double)>;

/// Adaptive integration of f over [a, b].
/// Non-convergence within max_subdivisions is reported via converged = false,
/// never by silently returning garbage; a non-finite integrand value throws.
IntegralResult integrate(const Integrand& f, double a, double b,
                         const Quadrature& q = {});

/// Cauchy principal value of integral_a^b g(mu)/(s - mu) dmu with the pole s
/// inside (a, b).  Computed by singularity subtraction,
///   integral [g(mu) - g(s)]/(s - mu) dmu  +  g(s) * ln((s-a)/(b-s)),
/// so g only needs to be smooth near s; no node alignment is required.
IntegralResult integrate_pv(const Integrand& g, double a, double b, double s,
                            const Quadrature& q = {});

/// integral_a^1 f(x) dx where f may diverge at x = 1 no faster than
/// 1/((1-x) * ln^2(1-x)).  Substitutes x = 1 - exp(-t) and integrates over
/// t in [t0, T]; the remainder beyond T is evaluated from a closed-form tail
/// model fitted to t^2 * f(x(t)) * exp(-t), which is exact for the limiting
/// singularity class and whose model error is folded into error_estimate.
IntegralResult integrate_endpoint_singular(const EndpointIntegrand& f,
                                           const Quadrature& q = {},
                                           double a = 0.0);

}  // namespace slabtrans
