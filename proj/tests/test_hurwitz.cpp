#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torus_zeta/bernoulli.hpp"
#include "torus_zeta/hurwitz.hpp"

using namespace torus_zeta;

namespace {

// Brute-force reference for Re s > 1: a long head plus the integral tail
// (N+y)^{1-s}/(s-1), accurate to ~N^{-Re s} without any correction series.
Complex direct_series(Complex s, double y, long n_terms) {
  Complex sum = 0.0;
  for (long k = 0; k < n_terms; ++k) sum += std::exp(-s * std::log(k + y));
  sum += std::exp((1.0 - s) * std::log(n_terms + y)) / (s - 1.0);
  return sum;
}

}  // namespace

TEST_CASE("matches the direct series for Re s > 1") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - direct_series(2.0, 1.0, 200000)) < 1e-10);
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - kPi * kPi / 6.0) < 1e-12);
  const Complex s(2.5, 1.5);
  CHECK(std::abs(hurwitz_zeta(s, 0.7) - direct_series(s, 0.7, 200000)) < 1e-9);
}

TEST_CASE("non-positive integers reduce to Bernoulli polynomials") {
  // zeta_H(-n, x) = -B_{n+1}(x) / (n+1)
  CHECK(std::abs(hurwitz_zeta(-3.0, 0.7) + bernoulli_poly(4, 0.7) / 4.0) < 1e-12);
  CHECK(std::abs(hurwitz_zeta(0.0, 0.25) - Complex(0.25)) < 1e-12);
  for (int n = 0; n <= 8; ++n)
    for (double y : {0.1, 0.4, 0.9, 1.6, 2.0})
      CHECK(std::abs(hurwitz_zeta(Complex(-n), y) + bernoulli_poly(n + 1, y) / (n + 1.0)) <
            1e-12);
}

TEST_CASE("shift law zeta_H(s,y) = y^{-s} + zeta_H(s,y+1)") {
  for (double re : {-4.0, -2.5, -0.5, 0.5, 2.0, 4.0})
    for (double im : {0.0, -2.0, 2.0})
      for (double y : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const Complex s(re, im);
        const Complex lhs = hurwitz_zeta(s, y);
        const Complex rhs = std::exp(-s * std::log(y)) + hurwitz_zeta(s, y + 1.0);
        CHECK(std::abs(lhs - rhs) < 1e-10);
      }
}

TEST_CASE("pole exclusion and domain checks") {
  CHECK_THROWS_AS(hurwitz_zeta(Complex(1.0 + 1e-9), 0.5), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 2.5), std::domain_error);
  CHECK_NOTHROW(hurwitz_zeta(Complex(1.01), 0.5));
}
