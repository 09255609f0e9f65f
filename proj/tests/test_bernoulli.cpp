#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "torus_zeta/bernoulli.hpp"

using namespace torus_zeta;

TEST_CASE("bernoulli numbers anchor values") {
  CHECK(bernoulli_rational(0) == Rational(1));
  // 1 + 2 B_1 = 0
  CHECK(bernoulli_rational(1) == Rational(-1, 2));
  CHECK(bernoulli_rational(2) == Rational(1, 6));
  CHECK(bernoulli_rational(3) == Rational(0));
  CHECK(bernoulli_rational(4) == Rational(-1, 30));
  CHECK(bernoulli_rational(12) == Rational(-691, 2730));
}

TEST_CASE("odd bernoulli numbers vanish beyond B_1") {
  for (int k = 3; k <= 21; k += 2) CHECK(bernoulli_rational(k) == Rational(0));
}

TEST_CASE("defining recurrence holds exactly for n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    Rational acc = 0;
    Rational binom = 1;  // C(n+1, 0)
    for (int k = 0; k <= n; ++k) {
      acc += binom * bernoulli_rational(k);
      binom = binom * Rational(n + 1 - k) / Rational(k + 1);
    }
    CHECK(acc == Rational(0));
  }
}

TEST_CASE("bernoulli polynomials") {
  CHECK(bernoulli_poly(0, Complex(12.3, -4.0)) == Complex(1.0));
  // B_1(x) = x - 1/2
  CHECK(std::abs(bernoulli_poly(1, 0.75) - Complex(0.25)) < 1e-15);
  // B_2(x) = x^2 - x + 1/6
  CHECK(std::abs(bernoulli_poly(2, 0.5) - Complex(-1.0 / 12.0)) < 1e-15);
  // complex argument sanity against the explicit cubic
  const Complex x(0.3, 0.8);
  const Complex b3 = x * x * x - 1.5 * x * x + 0.5 * x;
  CHECK(std::abs(bernoulli_poly(3, x) - b3) < 1e-14);
}

TEST_CASE("negative index rejected") {
  CHECK_THROWS_AS(bernoulli_rational(-1), std::invalid_argument);
}
