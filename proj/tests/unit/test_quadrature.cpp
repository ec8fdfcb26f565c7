#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "slabtrans/quadrature.hpp"

using namespace slabtrans;

namespace {

// tiny deterministic generator for property checks
struct Lcg {
  std::uint64_t s = 0x2545f4914f6cdd1dULL;
  double next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<double>(s >> 11) * 0x1.0p-53;
  }
};

}  // namespace

TEST_SUITE("quadrature") {

TEST_CASE("polynomials are exact on a single panel") {
  auto lin = integrate([](double x) { return x; }, 0.0, 1.0);
  CHECK(lin.converged);
  CHECK(lin.value == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(lin.evaluations == 31);

  auto one = integrate([](double) { return 1.0; }, 0.0, 1.0);
  CHECK(one.value == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("integrable log singularity at the endpoint") {
  auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0,
                     Quadrature{1e-10, 1e-10, 100, 31});
  CHECK(r.converged);
  CHECK(std::fabs(r.value - (-1.0)) < 1e-9);
  CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("converged flag is honest") {
  // starve the budget: the flag must drop, the estimate must say why
  auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0,
                     Quadrature{1e-12, 1e-12, 4, 31});
  CHECK(!r.converged);
  CHECK(r.error_estimate > 1e-12);

  auto ok = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(ok.converged);
  CHECK(ok.error_estimate <= std::max(1e-10, 1e-10 * std::fabs(ok.value)));
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0,
                            Quadrature{-1.0, 1e-10, 64, 31}),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0,
                            Quadrature{1e-10, 1e-10, 64, 30}),
                  std::invalid_argument);
  CHECK_THROWS(integrate([](double x) { return std::sqrt(x - 0.5); }, 0.0, 1.0));
}

TEST_CASE("linearity within 10x tolerance") {
  Lcg rng;
  auto poly = [](double a, double b, double c) {
    return [a, b, c](double x) { return a + b * x + c * x * x * x; };
  };
  for (int trial = 0; trial < 20; ++trial) {
    const double a1 = rng.next() * 4 - 2, b1 = rng.next() * 4 - 2, c1 = rng.next();
    const double a2 = rng.next() * 4 - 2, b2 = rng.next() * 4 - 2, c2 = rng.next();
    const double al = rng.next() * 3 - 1.5, be = rng.next() * 3 - 1.5;
    auto f = poly(a1, b1, c1);
    auto g = poly(a2, b2, c2);
    auto fg = [&](double x) { return al * f(x) + be * g(x); };
    const double lhs = integrate(fg, -1.0, 2.0).value;
    const double rhs = al * integrate(f, -1.0, 2.0).value +
                       be * integrate(g, -1.0, 2.0).value;
    CHECK(std::fabs(lhs - rhs) < 10.0 * 1e-10);
  }
}

TEST_CASE("refinement monotonicity against closed forms") {
  auto f = [](double x) { return std::log(x); };
  double prev = 1.0;
  for (double tol : {1e-4, 1e-6, 1e-8, 1e-10}) {
    auto r = integrate(f, 0.0, 1.0, Quadrature{tol, tol, 100, 31});
    const double disc = std::fabs(r.value - (-1.0));
    CHECK(disc <= std::max(prev, 5e-15));
    prev = disc;
  }
}

TEST_CASE("principal value: closed-form poles") {
  // symmetric pole: exact zero of the log term and the subtracted part
  auto sym = integrate_pv([](double) { return 1.0; }, 0.0, 1.0, 0.5);
  CHECK(std::fabs(sym.value) < 1e-12);

  // off-center pole: PV int 1/(s-mu) = ln((s-a)/(b-s))
  auto off = integrate_pv([](double) { return 1.0; }, 0.0, 1.0, 0.25);
  CHECK(std::fabs(off.value - std::log(0.25 / 0.75)) < 1e-10);

  // linear numerator: g = mu splits into -1 plus a vanishing log term
  auto lin = integrate_pv([](double mu) { return mu; }, 0.0, 1.0, 0.5);
  CHECK(std::fabs(lin.value - (-1.0)) < 1e-10);
}

TEST_CASE("principal value: pole must be interior") {
  CHECK_THROWS_AS(integrate_pv([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(integrate_pv([](double) { return 1.0; }, 0.0, 1.0, 1.5),
                  std::domain_error);
}

TEST_CASE("principal value: additivity across a domain split") {
  // PV over [0,1] equals plain integrals away from the pole plus PV on the
  // strip that still contains it.
  auto g = [](double mu) { return std::cos(mu); };
  const double s = 0.6;
  auto whole = integrate_pv(g, 0.0, 1.0, s);
  auto left = integrate([&](double mu) { return g(mu) / (s - mu); }, 0.0, 0.4);
  auto strip = integrate_pv(g, 0.4, 0.8, s);
  auto right = integrate([&](double mu) { return g(mu) / (s - mu); }, 0.8, 1.0);
  CHECK(std::fabs(whole.value - (left.value + strip.value + right.value)) < 1e-9);
}

TEST_CASE("endpoint singularity: 1/((1-x) ln^2(1-x))") {
  // antiderivative is 1/ln(1-x); from x = 1 - 1/e the integral to 1 is
  // exactly 1, with most of the mass in the unresolvable corner at x -> 1
  auto f = [](double, double omx) {
    const double l = std::log(omx);
    return 1.0 / (omx * l * l);
  };
  auto r = integrate_endpoint_singular(f, Quadrature{1e-10, 1e-10, 200, 31},
                                       1.0 - 1.0 / std::exp(1.0));
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 1.0) < 1e-9);

  // naive truncation at x = 1 - e^-20 would miss exactly 1/20 = 0.05
  auto trunc = integrate(
      [&f](double t) { return f(-std::expm1(-t), std::exp(-t)) * std::exp(-t); },
      1.0, 20.0, Quadrature{1e-10, 1e-10, 200, 31});
  CHECK(std::fabs(trunc.value - 0.95) < 1e-9);
}

TEST_CASE("endpoint singularity: smooth integrand matches plain integrate") {
  auto r = integrate_endpoint_singular([](double x, double) { return x * x; },
                                       Quadrature{1e-10, 1e-10, 200, 31});
  CHECK(r.converged);
  CHECK(std::fabs(r.value - 1.0 / 3.0) < 1e-10);
}

TEST_CASE("endpoint singularity: bad lower bound") {
  auto f = [](double, double) { return 1.0; };
  CHECK_THROWS_AS(integrate_endpoint_singular(f, {}, -0.1), std::domain_error);
  CHECK_THROWS_AS(integrate_endpoint_singular(f, {}, 1.0), std::domain_error);
}

}  // TEST_SUITE
