#pragma once

// Small statistics helpers for test code only: regularized incomplete gamma
// and a chi-squared goodness-of-fit test.  Kept independent of the library
// under test.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace test_stats {

// Regularized upper incomplete gamma Q(a, x): series for P when x < a+1,
// modified Lentz continued fraction for Q otherwise.
inline double gamma_q(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0)) throw std::invalid_argument("gamma_q: bad args");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 1000; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return 1.0 - sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

struct GofResult {
  double chi2 = 0.0;
  int dof = 0;
  double p_value = 0.0;
};

// Pearson chi-squared test of observed counts against expected bin
// probabilities (which must sum to ~1).
inline GofResult chi2_gof(const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& probs,
                          std::uint64_t n_total) {
  if (observed.size() != probs.size())
    throw std::invalid_argument("chi2_gof: size mismatch");
  GofResult r;
  int used = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = probs[i] * static_cast<double>(n_total);
    if (expected < 5.0) continue;  // standard validity floor
    const double d = static_cast<double>(observed[i]) - expected;
    r.chi2 += d * d / expected;
    ++used;
  }
  r.dof = used - 1;
  r.p_value = (r.dof > 0) ? gamma_q(0.5 * r.dof, 0.5 * r.chi2) : 1.0;
  return r;
}

}  // namespace test_stats
