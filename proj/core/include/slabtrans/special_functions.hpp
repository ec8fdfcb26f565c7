#pragma once

#include <vector>

#include "slabtrans/quadrature.hpp"

namespace slabtrans {

/// Single-scattering albedo, restricted to (0, 1].  The half-range
/// orthogonality machinery (gamma weight, H conversion, slab solver) requires
/// the conservative case c = 1 exactly; the X-function itself is evaluated
/// for any valid albedo.
class Albedo {
 public:
  explicit Albedo(double value);
  double value() const { return value_; }
  bool conservative() const { return value_ == 1.0; }

 private:
  double value_;
};

/// lambda(mu) = 1 - mu * arctanh(mu) for mu in [0, 1).
/// Equals 1 at mu = 0 and diverges to -inf logarithmically as mu -> 1.
double lambda_fn(double mu);

/// A(mu) = 2 * lambda(mu) / mu for mu in (0, 1).  1/A vanishes as mu -> 1.
double a_fn(double mu);

/// Evaluator for the Chandrasekhar-type X-function at negative argument,
///
///   X(-mu) = exp( -c/2 * integral_0^1 W(x) ln(x + mu) dx ),
///   W(x)   = (1 + c x^2/(1-x^2)) / ([1 - c x arctanh x]^2 + (pi c x / 2)^2),
///
/// for mu in [0, 1].  The integrand has an integrable singularity at x = 1
/// (handled by integrate_endpoint_singular) and a logarithmic corner at
/// x = 0 when mu = 0 (split off and integrated in closed form).
///
struct XFunctionOptions {
  int cache_nodes = 128;  // Chebyshev intervals; 0 disables the cache
  Quadrature quad{1e-11, 1e-11, 400, 31};
};

/// Construction optionally tabulates a Chebyshev interpolant of the smooth
/// remainder of the integral; cached evaluation then agrees with direct
/// quadrature to better than 1e-9 at roughly a hundredth of the cost.
/// Instances are immutable after construction and safe to share.
class XFunction {
 public:
  using Options = XFunctionOptions;

  explicit XFunction(Albedo c, Options opt = {});

  /// X(-mu); uses the cache when present.
  double at(double mu) const;

  /// X(-mu) by direct quadrature, bypassing any cache.
  double direct(double mu) const;

  Albedo albedo() const { return c_; }
  const Quadrature& quadrature() const { return opt_.quad; }
  bool cached() const { return !cache_remainder_.empty(); }

 private:
  double integral_direct(double mu) const;
  double integral_cached(double mu) const;

  Albedo c_;
  Options opt_;
  std::vector<double> cache_mu_;         // Chebyshev-Lobatto nodes on [0,1]
  std::vector<double> cache_remainder_;  // smooth remainder of the exponent
  std::vector<double> cache_bary_;       // barycentric weights
};

/// H(mu) = sqrt(3) / X(-mu); the conversion constant is the conservative
/// limit, so this requires c = 1.
double h_fn(const XFunction& x, double mu);

/// Half-range orthogonality weight gamma(mu) = (3/2) mu / X(-mu), c = 1 only.
double gamma_fn(const XFunction& x, double mu);

/// Moments of the gamma weight over [0, 1].  gamma0 is 1 up to quadrature
/// error; gamma1 is the Milne extrapolation length z0 (0.7104... for
/// conservative isotropic scattering) and feeds the thick-slab solver.
struct GammaMoments {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
};

GammaMoments gamma_moments(const XFunction& x,
                           const Quadrature& q = {1e-10, 1e-10, 256, 31});

}  // namespace slabtrans
