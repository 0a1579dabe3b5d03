#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "contspec/numerics.hpp"
#include "contspec/quadrature.hpp"
#include "oracles.hpp"

using namespace contspec;

TEST_CASE("erf basics") {
  CHECK(erf(0.0) == 0.0);
  CHECK(erf(0.7) == -erf(-0.7));
  // Frozen from the series oracle summed to 1e-15.
  const double oracle = oracles::erf_series(1.0);
  CHECK(std::fabs(oracle - 0.8427007929497149) < 1e-15);
  CHECK(std::fabs(erf(1.0) - oracle) < 1e-15);
}

TEST_CASE("erf is odd, bounded and increasing") {
  double prev = erf(-5.0);
  for (double x = -5.0 + 0.125; x <= 5.0; x += 0.125) {
    const double v = erf(x);
    CHECK(v > prev);
    CHECK(std::fabs(v) < 1.0);
    CHECK(std::fabs(v + erf(-x)) < 1e-15);
    prev = v;
  }
}

TEST_CASE("erfc basics") {
  CHECK(erfc(0.0) == 1.0);
  CHECK(erfc(40.0) < 1e-300);  // asymptotic limit without cancellation
  CHECK(erfc(40.0) >= 0.0);
  CHECK(std::fabs(erfc(-1.0) - (2.0 - erfc(1.0))) < 1e-15);  // symmetry oracle
  CHECK(std::fabs(erfc(-1.0) - 1.8427007929497149) < 1e-15);
}

TEST_CASE("erf + erfc = 1 to 1e-15 on |x| <= 6") {
  for (double x = -6.0; x <= 6.0; x += 0.0625)
    CHECK(std::fabs(erf(x) + erfc(x) - 1.0) <= 1e-15);
}

TEST_CASE("erfc is positive and decreasing") {
  double prev = erfc(-6.0);
  for (double x = -6.0 + 0.25; x <= 8.0; x += 0.25) {
    const double v = erfc(x);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("erfcx matches its definition and its asymptotic tail") {
  for (double x : {-3.0, -1.0, -0.25, 0.0, 0.5, 2.0, 10.0, 20.0})
    CHECK(erfcx(x) == doctest::Approx(std::exp(x * x) * std::erfc(x)).epsilon(1e-12));
  // Continuity across the series/asymptotic switch at x = 26.
  CHECK(erfcx(25.999) == doctest::Approx(erfcx(26.001)).epsilon(1e-10));
  // Leading order 1/(x sqrt(pi)).
  CHECK(erfcx(1e4) == doctest::Approx(1.0 / (1e4 * std::sqrt(M_PI))).epsilon(1e-8));
}

TEST_CASE("gauss_m0 closed forms") {
  CHECK(gauss_m0(1.0, 0.0) == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-14));
  CHECK(gauss_m0(4.0, 0.0) == doctest::Approx(0.5 * std::sqrt(M_PI / 4)).epsilon(1e-14));
  // Frozen from the adaptive quadrature oracle of int_0^inf e^{2E - E^2} dE.
  CHECK(gauss_m0(1.0, 2.0) == doctest::Approx(4.439093016628066).epsilon(1e-13));
  CHECK_THROWS_AS(gauss_m0(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_m0(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("gauss_m1 closed forms") {
  CHECK(gauss_m1(1.0, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(gauss_m1(2.0, 0.0) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(gauss_m1(1.0, 2.0) == doctest::Approx(0.5 + gauss_m0(1.0, 2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_m1(-1.0, 0.0), std::invalid_argument);
}

TEST_CASE("moments agree with adaptive quadrature to 1e-9") {
  QuadratureSpec spec;
  spec.transform = QuadTransform::gaussian_centering;
  for (double a : {0.25, 1.0, 4.0}) {
    for (double b : {-3.0, 0.0, 3.0}) {
      const auto q0 = integrate_half_line(
          [a, b](double e) { return std::exp(-a * e * e + b * e); }, spec);
      const auto q1 = integrate_half_line(
          [a, b](double e) { return e * std::exp(-a * e * e + b * e); }, spec);
      CHECK(std::fabs(q0.value - gauss_m0(a, b)) <= 1e-9 * (1.0 + gauss_m0(a, b)));
      CHECK(std::fabs(q1.value - gauss_m1(a, b)) <= 1e-9 * (1.0 + gauss_m1(a, b)));
    }
  }
}

TEST_CASE("first-moment relation M1 = 1/(2a) + (b/2a) M0") {
  for (double a : {0.25, 1.0, 4.0})
    for (double b : {-3.0, 0.0, 3.0}) {
      const double lhs = gauss_m1(a, b);
      const double rhs = 1.0 / (2 * a) + (b / (2 * a)) * gauss_m0(a, b);
      CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::fabs(rhs));
    }
}
