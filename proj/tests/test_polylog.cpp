#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torus_zeta/polylog.hpp"

using namespace torus_zeta;

TEST_CASE("empty sum at the origin") {
  for (int n : {1, 2, 5}) CHECK(polylog(n, Complex(0.0)) == Complex(0.0));
}

TEST_CASE("Li_1(z) = -ln(1-z)") {
  CHECK(std::abs(polylog(1, 0.5) - Complex(std::log(2.0))) < 1e-13);
  const Complex z(0.2, 0.6);
  CHECK(std::abs(polylog(1, z) + std::log(1.0 - z)) < 1e-13);
}

TEST_CASE("index lowering under differentiation") {
  // (1/2 pi i) d/dy Li_{n+1}(e^{2 pi i y}) = Li_n(e^{2 pi i y})
  const Complex y(0.1, 0.3);
  const double h = 1e-5;
  for (int n : {1, 2}) {
    const Complex up = polylog(n + 1, std::exp(2.0 * kPi * kImagUnit * (y + h)));
    const Complex dn = polylog(n + 1, std::exp(2.0 * kPi * kImagUnit * (y - h)));
    const Complex fd = (up - dn) / (2.0 * h) / (2.0 * kPi * kImagUnit);
    const Complex direct = polylog(n, std::exp(2.0 * kPi * kImagUnit * y));
    CHECK(std::abs(fd - direct) < 1e-6);
  }
}

TEST_CASE("truncation bound against a million-term sum at |z| = 0.9") {
  const Complex z = 0.9 * std::exp(Complex(0.0, 1.1));
  for (int n : {1, 2, 3}) {
    Complex direct = 0.0, zk = 1.0;
    for (long k = 1; k <= 1000000; ++k) {
      zk *= z;
      direct += zk / std::pow(static_cast<double>(k), n);
    }
    SeriesTruncation trunc;
    trunc.tol = 1e-12;
    CHECK(std::abs(polylog(n, z, trunc) - direct) < 1e-11);
  }
}

TEST_CASE("radius guard") {
  CHECK_THROWS_AS(polylog(2, Complex(0.9999999)), std::domain_error);
  CHECK_THROWS_AS(polylog(2, Complex(1.2)), std::domain_error);
  CHECK_THROWS_AS(polylog(0, Complex(0.5)), std::invalid_argument);
}

TEST_CASE("budget guard") {
  SeriesTruncation trunc;
  trunc.tol = 1e-30;
  trunc.max_terms = 10;
  CHECK_THROWS_AS(polylog(1, Complex(0.9), trunc), SeriesBudgetError);
}
