#include "slabtrans/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slabtrans {

namespace {

constexpr double kPi = std::numbers::pi;

// arctanh via 0.5*ln((1+x)/(1-x)); the log1p form keeps full precision as
// x -> 1.
double atanh_acc(double x) {
  if (x < 0.5) return std::atanh(x);
  return 0.5 * (std::log1p(x) - std::log1p(-x));
}

// integral_0^s ln(x + mu) dx
double log_moment0(double s, double mu) {
  const double mulog = (mu > 0.0) ? mu * std::log(mu) : 0.0;
  return (s + mu) * std::log(s + mu) - s - mulog;
}

// integral_0^s x^2 ln(x + mu) dx
double log_moment2(double s, double mu) {
  const double s3 = s * s * s;
  double tail = 0.0;
  if (mu > 0.0)
    tail = mu * s * s / 6.0 - mu * mu * s / 3.0 +
           (mu * mu * mu / 3.0) * std::log((s + mu) / mu);
  return (s3 / 3.0) * std::log(s + mu) - s3 / 9.0 + tail;
}

// W(x) expansion near 0 is even: W = 1 + w2 x^2 + O(x^4).
double w2_coefficient(double c) { return 3.0 * c - 0.25 * kPi * kPi * c * c; }

void check_mu_unit_interval(double mu, const char* who) {
  if (!(mu >= 0.0 && mu <= 1.0))
    throw std::domain_error(std::string(who) + ": mu must lie in [0, 1]");
}

}  // namespace

Albedo::Albedo(double value) : value_(value) {
  if (!(value > 0.0 && value <= 1.0))
    throw std::domain_error("Albedo: must lie in (0, 1]");
}

double lambda_fn(double mu) {
  if (!(mu >= 0.0 && mu < 1.0))
    throw std::domain_error("lambda_fn: mu must lie in [0, 1)");
  if (mu == 0.0) return 1.0;
  return 1.0 - mu * atanh_acc(mu);
}

double a_fn(double mu) {
  if (!(mu > 0.0 && mu < 1.0))
    throw std::domain_error("a_fn: mu must lie in (0, 1)");
  return 2.0 * lambda_fn(mu) / mu;
}

XFunction::XFunction(Albedo c, Options opt) : c_(c), opt_(opt) {
  opt_.quad.validate();
  if (opt_.cache_nodes < 0)
    throw std::invalid_argument("XFunction: cache_nodes must be >= 0");
  if (opt_.cache_nodes == 0) return;

  // Tabulate the smooth remainder R(mu) = I(mu) - J0(mu) - w2 J2(mu) of the
  // exponent integral at Chebyshev-Lobatto nodes.  The subtracted closed
  // forms carry the mu*ln(mu) edge behavior, leaving R smooth enough for the
  // interpolant to track direct quadrature to ~1e-10.
  const int n = opt_.cache_nodes;
  const double w2 = w2_coefficient(c_.value());
  cache_mu_.resize(n + 1);
  cache_remainder_.resize(n + 1);
  cache_bary_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double mu = 0.5 * (1.0 + std::cos(k * kPi / n));
    cache_mu_[k] = mu;
    cache_remainder_[k] =
        integral_direct(mu) - log_moment0(1.0, mu) - w2 * log_moment2(1.0, mu);
    double w = (k == 0 || k == n) ? 0.5 : 1.0;
    cache_bary_[k] = (k % 2 == 0) ? w : -w;
  }
}

double XFunction::integral_direct(double mu) const {
  const double c = c_.value();
  const double w2 = w2_coefficient(c);

  // [0, xs]: W is 1 + w2 x^2 to O(xs^4); integrate the log factor in closed
  // form.  This removes the logarithmic corner at x = 0 when mu = 0.
  constexpr double xs = 1e-4;
  const double left = log_moment0(xs, mu) + w2 * log_moment2(xs, mu);

  // [xs, 1): full integrand, with all (1-x)-sensitive factors computed from
  // the exact one_minus_x supplied by the engine.
  auto f = [c, mu](double x, double omx) {
    const double at = (x < 0.5) ? std::atanh(x)
                                : 0.5 * (std::log(2.0 - omx) - std::log(omx));
    const double lam = 1.0 - c * x * at;
    const double pcx = 0.5 * kPi * c * x;
    const double denom = lam * lam + pcx * pcx;
    const double w = (1.0 - (1.0 - c) * x * x) / (omx * (2.0 - omx)) / denom;
    return w * std::log(x + mu);
  };
  IntegralResult right = integrate_endpoint_singular(f, opt_.quad, xs);
  if (!right.converged)
    throw std::runtime_error(
        "XFunction: quadrature did not converge (error estimate " +
        std::to_string(right.error_estimate) + ")");
  return left + right.value;
}

double XFunction::integral_cached(double mu) const {
  // Barycentric interpolation of the remainder, plus the closed forms.
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < cache_mu_.size(); ++k) {
    const double d = mu - cache_mu_[k];
    if (d == 0.0) {
      num = cache_remainder_[k];
      den = 1.0;
      break;
    }
    const double t = cache_bary_[k] / d;
    num += t * cache_remainder_[k];
    den += t;
  }
  const double w2 = w2_coefficient(c_.value());
  return log_moment0(1.0, mu) + w2 * log_moment2(1.0, mu) + num / den;
}

double XFunction::at(double mu) const {
  check_mu_unit_interval(mu, "XFunction::at");
  const double integral = cached() ? integral_cached(mu) : integral_direct(mu);
  return std::exp(-0.5 * c_.value() * integral);
}

double XFunction::direct(double mu) const {
  check_mu_unit_interval(mu, "XFunction::direct");
  return std::exp(-0.5 * c_.value() * integral_direct(mu));
}

double h_fn(const XFunction& x, double mu) {
  if (!x.albedo().conservative())
    throw std::domain_error("h_fn: the sqrt(3) conversion holds for unit albedo only");
  check_mu_unit_interval(mu, "h_fn");
  return std::numbers::sqrt3 / x.at(mu);
}

double gamma_fn(const XFunction& x, double mu) {
  if (!x.albedo().conservative())
    throw std::domain_error("gamma_fn: the gamma weight requires unit albedo");
  check_mu_unit_interval(mu, "gamma_fn");
  return 1.5 * mu / x.at(mu);
}

GammaMoments gamma_moments(const XFunction& x, const Quadrature& q) {
  if (!x.albedo().conservative())
    throw std::domain_error("gamma_moments: requires unit albedo");

  auto weight = [&x](double mu) { return 1.5 * mu / x.at(mu); };
  IntegralResult m0 = integrate(weight, 0.0, 1.0, q);
  IntegralResult m1 =
      integrate([&weight](double mu) { return weight(mu) * mu; }, 0.0, 1.0, q);
  if (!m0.converged || !m1.converged)
    throw std::runtime_error("gamma_moments: quadrature did not converge");
  return GammaMoments{m0.value, m1.value};
}

}  // namespace slabtrans
