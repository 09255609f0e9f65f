#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torus_zeta/quadrature.hpp"

using namespace torus_zeta;

TEST_CASE("constant integrand") {
  const QuadResult r = integrate_01([](double) { return Complex(1.0); }, 1e-12);
  CHECK(std::abs(r.value - Complex(1.0)) < 1e-14);
  CHECK(r.abs_err < 1e-13);
  CHECK(r.evaluations >= 15);
}

TEST_CASE("full-period oscillation integrates to zero") {
  const QuadResult r =
      integrate_01([](double y) { return std::exp(2.0 * kPi * kImagUnit * y); }, 1e-12);
  CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("complex polynomial with exact antiderivative") {
  const QuadResult r =
      integrate_01([](double y) { return Complex(y * y * y, -y); }, 1e-12);
  CHECK(std::abs(r.value - Complex(0.25, -0.5)) < 1e-14);
}

TEST_CASE("linearity within twice the tolerance") {
  const auto f = [](double y) { return std::exp(Complex(y, y)); };
  const auto g = [](double y) { return Complex(std::cos(4.0 * y), y * y); };
  const Complex alpha(1.4, -0.3), beta(0.0, 2.0);
  const double tol = 1e-11;
  const Complex combined =
      integrate_01([&](double y) { return alpha * f(y) + beta * g(y); }, tol).value;
  const Complex split =
      alpha * integrate_01(f, tol).value + beta * integrate_01(g, tol).value;
  CHECK(std::abs(combined - split) < 2.0 * tol);
}

TEST_CASE("identical inputs give bitwise-identical results") {
  const auto f = [](double y) { return std::exp(Complex(0.0, 7.0) * y) / (1.0 + y); };
  const QuadResult a = integrate_01(f, 1e-11);
  const QuadResult b = integrate_01(f, 1e-11);
  CHECK(a.value.real() == b.value.real());
  CHECK(a.value.imag() == b.value.imag());
  CHECK(a.abs_err == b.abs_err);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("reported error bounds true error on analytic battery") {
  struct Case {
    Complex (*f)(double);
    Complex exact;
  };
  static const double e1 = std::exp(1.0);
  const Case battery[] = {
      {[](double y) { return Complex(std::pow(y, 5)); }, Complex(1.0 / 6.0)},
      {[](double y) { return std::exp(Complex(y)); }, Complex(e1 - 1.0)},
      {[](double y) { return Complex(std::cos(3.0 * y)); }, Complex(std::sin(3.0) / 3.0)},
      {[](double y) { return Complex(1.0 / (1.0 + y)); }, Complex(std::log(2.0))},
      {[](double y) { return Complex(y * std::exp(y)); }, Complex(1.0)},
      {[](double y) { return Complex(std::pow(2.0 * y - 1.0, 7)); }, Complex(0.0)},
  };
  for (const auto& c : battery) {
    const QuadResult r = integrate_01(c.f, 1e-11);
    CHECK(std::abs(r.value - c.exact) <= r.abs_err + 1e-15);
  }
}

TEST_CASE("non-finite integrand is an error") {
  CHECK_THROWS_AS(integrate_01([](double y) { return Complex(1.0 / (y - y)); }, 1e-10),
                  ConvergenceError);
}

TEST_CASE("unreachable tolerance exhausts the budget") {
  // highly oscillatory with a tiny budget
  CHECK_THROWS_AS(
      integrate([](double y) { return std::cos(Complex(4000.0 * y)); }, 0.0, 1.0, 1e-13,
                200),
      ConvergenceError);
}

TEST_CASE("arbitrary interval") {
  const QuadResult r = integrate([](double y) { return Complex(y); }, -1.0, 3.0, 1e-12);
  CHECK(std::abs(r.value - Complex(4.0)) < 1e-12);
}
