#include "slabtrans/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace slabtrans {

namespace {

// Fejer-2 rule on (-1,1): interior nodes cos(k*pi/n), k = 1..n-1, which are
// nested under n -> 2n.  The even-k subset is the n/2 rule and provides an
// embedded error estimate at zero extra evaluations.
struct Fejer2 {
  std::vector<double> nodes;         // size n-1
  std::vector<double> weights;       // size n-1
  std::vector<double> half_weights;  // size n/2-1, attached to nodes[1,3,..]
};

Fejer2 make_fejer2(int n) {
  const double pi = std::numbers::pi;
  Fejer2 r;
  r.nodes.resize(n - 1);
  r.weights.resize(n - 1);
  for (int k = 1; k < n; ++k) {
    const double theta = k * pi / n;
    double s = 0.0;
    for (int m = 1; m <= n / 2; ++m)
      s += std::sin((2 * m - 1) * theta) / (2 * m - 1);
    r.nodes[k - 1] = std::cos(theta);
    r.weights[k - 1] = 4.0 / n * std::sin(theta) * s;
  }
  const int nh = n / 2;
  r.half_weights.resize(nh - 1);
  for (int j = 1; j < nh; ++j) {
    const double theta = j * pi / nh;
    double s = 0.0;
    for (int m = 1; m <= nh / 2; ++m)
      s += std::sin((2 * m - 1) * theta) / (2 * m - 1);
    r.half_weights[j - 1] = 4.0 / nh * std::sin(theta) * s;
  }
  return r;
}

struct Segment {
  double a, b;
  double value;
  double error;
  bool splittable;
};

Segment eval_segment(const Integrand& f, double a, double b, const Fejer2& rule,
                     long long& evaluations) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = static_cast<int>(rule.nodes.size());

  double full = 0.0;
  double coarse = 0.0;
  int jh = 0;
  for (int i = 0; i < m; ++i) {
    const double v = f(mid + half * rule.nodes[i]);
    if (!std::isfinite(v))
      throw std::runtime_error("integrate: integrand returned a non-finite value");
    full += rule.weights[i] * v;
    // nodes[1], nodes[3], ... are the nodes of the embedded half rule
    if (i % 2 == 1 && jh < static_cast<int>(rule.half_weights.size()))
      coarse += rule.half_weights[jh++] * v;
  }
  evaluations += m;

  Segment s;
  s.a = a;
  s.b = b;
  s.value = half * full;
  s.error = std::abs(half * (full - coarse));
  s.splittable = (mid > a && mid < b);
  return s;
}

IntegralResult integrate_adaptive(const Integrand& f, double a, double b,
                                  const Quadrature& q) {
  const Fejer2 rule = make_fejer2(q.base_rule_points + 1);

  IntegralResult res;
  std::vector<Segment> segs;
  segs.push_back(eval_segment(f, a, b, rule, res.evaluations));

  auto totals = [&segs](double& value, double& error) {
    value = 0.0;
    error = 0.0;
    for (const Segment& s : segs) {
      value += s.value;
      error += s.error;
    }
  };

  double value = 0.0, error = 0.0;
  int splits = 0;
  for (;;) {
    totals(value, error);
    const double tol = std::max(q.abs_tol, q.rel_tol * std::abs(value));
    if (error <= tol) break;
    if (splits >= q.max_subdivisions) break;

    int worst = -1;
    double worst_err = 0.0;
    for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
      if (segs[i].splittable && segs[i].error > worst_err) {
        worst_err = segs[i].error;
        worst = i;
      }
    }
    if (worst < 0 || worst_err == 0.0) break;

    const Segment old = segs[worst];
    const double mid = 0.5 * (old.a + old.b);
    segs[worst] = eval_segment(f, old.a, mid, rule, res.evaluations);
    segs.push_back(eval_segment(f, mid, old.b, rule, res.evaluations));
    ++splits;
  }

  totals(value, error);
  res.value = value;
  res.error_estimate = error;
  res.converged = error <= std::max(q.abs_tol, q.rel_tol * std::abs(value));
  return res;
}

void check_finite_bounds(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate: bounds must be finite");
  if (!(a < b)) throw std::invalid_argument("integrate: requires a < b");
}

// integral over [0,1] of the Lagrange basis polynomials through `pts`.
std::vector<double> lagrange_integral_weights(const std::vector<double>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    std::vector<double> poly{1.0};  // ascending coefficients
    double denom = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      denom *= pts[i] - pts[j];
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] -= poly[k] * pts[j];
        next[k + 1] += poly[k];
      }
      poly = std::move(next);
    }
    double integral = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) integral += poly[k] / (k + 1);
    w[i] = integral / denom;
  }
  return w;
}

}  // namespace

void Quadrature::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
    throw std::invalid_argument("Quadrature: tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::invalid_argument("Quadrature: max_subdivisions must be >= 1");
  if (base_rule_points < 3 || base_rule_points % 2 == 0)
    throw std::invalid_argument("Quadrature: base_rule_points must be odd and >= 3");
}

IntegralResult integrate(const Integrand& f, double a, double b,
                         const Quadrature& q) {
  q.validate();
  check_finite_bounds(a, b);
  return integrate_adaptive(f, a, b, q);
}

IntegralResult integrate_pv(const Integrand& g, double a, double b, double s,
                            const Quadrature& q) {
  q.validate();
  check_finite_bounds(a, b);
  if (!(a < s && s < b))
    throw std::domain_error("integrate_pv: pole must lie strictly inside (a, b)");

  const double gs = g(s);
  if (!std::isfinite(gs))
    throw std::runtime_error("integrate_pv: numerator non-finite at the pole");

  // Slope of g at s, used inside a tiny guard band around the pole where the
  // difference quotient is pure cancellation noise.
  const double scale = std::max(1.0, std::abs(s));
  const double hd = std::min({1e-6 * scale, 0.5 * (s - a), 0.5 * (b - s)});
  const double slope = (g(s + hd) - g(s - hd)) / (2.0 * hd);
  const double guard = 1e-9 * scale;

  auto subtracted = [&g, gs, s, slope, guard](double mu) {
    const double d = s - mu;
    if (std::abs(d) <= guard) return -slope;
    return (g(mu) - gs) / d;
  };

  IntegralResult res = integrate_adaptive(subtracted, a, b, q);
  res.evaluations += 3;
  res.value += gs * std::log((s - a) / (b - s));
  return res;
}

IntegralResult integrate_endpoint_singular(const EndpointIntegrand& f,
                                           const Quadrature& q, double a) {
  q.validate();
  if (!(a >= 0.0 && a < 1.0))
    throw std::domain_error("integrate_endpoint_singular: lower bound must lie in [0, 1)");

  // t-range cap: exp(-T) stays a normal double, so callers always see a
  // usable one_minus_x.
  constexpr double kTcut = 690.0;
  const double t0 = -std::log1p(-a);
  if (!(t0 < kTcut / 8.0))
    throw std::domain_error("integrate_endpoint_singular: lower bound too close to 1");

  auto g = [&f](double t) {
    const double omx = std::exp(-t);
    const double x = -std::expm1(-t);  // 1 - exp(-t) at full relative precision
    return f(x, omx) * omx;            // omx is the Jacobian dx/dt
  };

  // Reserve half of the tolerance budget for the tail model below.
  Quadrature inner = q;
  inner.abs_tol *= 0.5;
  inner.rel_tol *= 0.5;
  IntegralResult res = integrate_adaptive(g, t0, kTcut, inner);

  // Tail beyond T: with h(t) = t^2 g(t) -> const for the admissible
  // singularity class,
  //   integral_T^inf h(t)/t^2 dt = (1/T) integral_0^1 h(T/u) du,
  // so fit h(T/u) by a quartic at u = 1, 2, 3, 5, 8 and integrate the fit;
  // the drop to the embedded cubic estimates the model error.  Exact for a
  // pure 1/((1-x) ln^2(1-x)) singularity, where h is constant.
  const std::vector<double> us{1.0, 2.0, 3.0, 5.0, 8.0};
  const std::vector<double> w5 = lagrange_integral_weights(us);
  const std::vector<double> w4 =
      lagrange_integral_weights({us[0], us[1], us[2], us[3]});
  double tail5 = 0.0, tail4 = 0.0;
  for (std::size_t i = 0; i < us.size(); ++i) {
    const double t = kTcut / us[i];
    const double h = t * t * g(t);
    tail5 += w5[i] * h;
    if (i < w4.size()) tail4 += w4[i] * h;
  }
  tail5 /= kTcut;
  tail4 /= kTcut;
  res.evaluations += static_cast<long long>(us.size());

  res.value += tail5;
  res.error_estimate += std::abs(tail5 - tail4);
  res.converged = res.error_estimate <=
                  std::max(q.abs_tol, q.rel_tol * std::abs(res.value));
  return res;
}

}  // namespace slabtrans
