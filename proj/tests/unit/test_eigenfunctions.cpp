#include <cmath>
#include <stdexcept>

#include "common.hpp"
#include "doctest.h"
#include "slabtrans/eigenfunctions.hpp"

using namespace slabtrans;

TEST_SUITE("eigenfunctions") {

TEST_CASE("regular values") {
  CHECK(phi_regular(0.5, -0.2) == doctest::Approx(0.25 / 0.7).epsilon(1e-15));
  CHECK(phi_regular(0.5, 0.0) == 0.5);
  CHECK(phi_regular(1.0, -1.0) == 0.25);
}

TEST_CASE("domain checks") {
  CHECK_THROWS_AS(phi_regular(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(phi_regular(1.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(phi_regular(0.5, 0.5), std::domain_error);  // needs pair_phi
  CHECK_THROWS_AS(phi_regular(0.5, 1.2), std::domain_error);
  CHECK_THROWS_AS(pair_phi(0.0, [](double) { return 1.0; }), std::domain_error);
  CHECK_THROWS_AS(pair_phi(1.0, [](double) { return 1.0; }), std::domain_error);
  CHECK_THROWS_AS(pair_phi_neg(0.0, [](double) { return 1.0; }), std::domain_error);
}

TEST_CASE("reflection symmetry is exact in arithmetic") {
  for (double nu : {0.05, 0.37, 0.62, 0.985, 1.0})
    for (double mu : {-0.93, -0.5501, -0.08, 0.333, 0.77})
      CHECK(phi_regular(-nu, mu) == phi_regular(nu, -mu));
}

TEST_CASE("pairing against a constant weight isolates the delta term") {
  // symmetric pole kills the PV part, leaving lambda(1/2)
  const double v = pair_phi(0.5, [](double) { return 1.0; });
  CHECK(v == doctest::Approx(lambda_fn(0.5)).epsilon(1e-10));
}

TEST_CASE("delta-term weight is lambda(nu) for polynomial weights") {
  auto w = [](double mu) { return 1.0 + 2.0 * mu - 0.75 * mu * mu; };
  for (double nu : {0.2, 0.5, 0.8}) {
    const double paired = pair_phi(nu, w);
    const double pv = integrate_pv(w, 0.0, 1.0, nu, {1e-9, 1e-9, 256, 31}).value;
    CHECK(paired - 0.5 * nu * pv ==
          doctest::Approx(lambda_fn(nu) * w(nu)).epsilon(1e-10));
  }
}

TEST_CASE("orthogonality against the gamma weight") {
  const XFunction& x = conservative_x();
  auto gamma_w = [&x](double mu) { return gamma_fn(x, mu); };
  for (double nu : {0.1, 0.5, 0.9})
    CHECK(std::fabs(pair_phi(nu, gamma_w)) < 1e-6);
}

TEST_CASE("normalization pairing equals (nu/2) X(-nu)") {
  const XFunction& x = conservative_x();
  auto gamma_w = [&x](double mu) { return gamma_fn(x, mu); };
  for (double nu : {0.25, 0.5, 1.0}) {
    const double lhs = pair_phi_neg(nu, gamma_w);
    CHECK(std::fabs(lhs - 0.5 * nu * x.at(nu)) < 1e-6);
    // the equivalent (3/4) nu^2 / gamma(nu) form
    CHECK(lhs == doctest::Approx(0.75 * nu * nu / gamma_fn(x, nu)).epsilon(1e-7));
  }
  // frozen spot value: (1/2) X(-1)
  CHECK(pair_phi_neg(1.0, gamma_w) == doctest::Approx(0.297827315).epsilon(1e-6));
}

TEST_CASE("zero weight pairs to zero") {
  CHECK(pair_phi_neg(0.7, [](double) { return 0.0; }) == 0.0);
}

}  // TEST_SUITE
