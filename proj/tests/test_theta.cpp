#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "torus_zeta/theta.hpp"

using namespace torus_zeta;

TEST_CASE("theta1 vanishes at the origin") {
  const auto ctx = ThetaContext::from_nome(0.37);
  CHECK(std::abs(theta1(Complex(0.0), ctx)) == 0.0);
}

TEST_CASE("theta1 half-period sign flip") {
  const auto ctx = ThetaContext::from_nome(0.2);
  const Complex z(0.3, 0.1);
  const Complex lhs = theta1(z + kPi, ctx);
  const Complex rhs = -theta1(z, ctx);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("theta1 small-nome limit") {
  const auto ctx = ThetaContext::from_nome(1e-6);
  const Complex expected = 2.0 * std::pow(1e-6, 0.25) * std::sin(Complex(1.0));
  CHECK(std::abs(theta1(Complex(1.0), ctx) - expected) < 1e-10 * std::abs(expected));
}

TEST_CASE("theta1 full lattice quasi-periodicity") {
  const auto ctx = ThetaContext::from_nome(0.3);
  const Complex z(0.7, 0.25);
  for (int m = -1; m <= 1; ++m)
    for (int n = -1; n <= 1; ++n) {
      const Complex shift = (static_cast<double>(m) + ctx.tau * static_cast<double>(n)) * kPi;
      const Complex lhs = theta1(z + shift, ctx);
      const Complex phase =
          (((m + n) % 2 == 0) ? 1.0 : -1.0) *
          std::exp(-kImagUnit *
                   (2.0 * static_cast<double>(n) * z + kPi * static_cast<double>(n * n) * ctx.tau));
      const Complex rhs = phase * theta1(z, ctx);
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
    }
}

TEST_CASE("log_theta1_fourier exponentiates back to theta1") {
  const auto ctx = ThetaContext::from_nome(std::exp(-kPi));  // tau = i
  const Complex z(0.5, 0.2);
  const Complex lhs = std::exp(log_theta1_fourier(z, ctx));
  const Complex rhs = theta1(z, ctx);
  CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
}

TEST_CASE("log_theta1_fourier small-nome limit") {
  const auto ctx = ThetaContext::from_nome(1e-8);
  const Complex z(0.9, 0.5);
  const Complex expected =
      std::log(2.0 * std::sin(z)) + std::log(1e-8) / 6.0 + kImagUnit * kPi * ctx.tau / 12.0;
  CHECK(std::abs(log_theta1_fourier(z, ctx) - expected) < 1e-12);
}

TEST_CASE("log_theta1_fourier agrees with the sum of product-factor logs") {
  const auto ctx = ThetaContext::from_nome(0.4);
  const Complex z(1.0, 0.3);
  Complex product_form = std::log(Complex(2.0)) + std::log(dedekind_eta(ctx)) +
                         std::log(0.4) / 6.0 + std::log(std::sin(z));
  const double q2 = 0.16;
  double q2n = 1.0;
  for (int n = 1; n <= 60; ++n) {
    q2n *= q2;
    product_form += std::log(1.0 - 2.0 * q2n * std::cos(2.0 * z) + q2n * q2n);
  }
  CHECK(std::abs(log_theta1_fourier(z, ctx) - product_form) < 1e-12);
}

TEST_CASE("strip violation raises") {
  const auto ctx = ThetaContext::from_nome(0.5);
  CHECK_THROWS_AS(log_theta1_fourier(Complex(0.5, -0.1), ctx), std::domain_error);
  CHECK_THROWS_AS(log_theta1_fourier(Complex(0.5, 10.0), ctx), std::domain_error);
}

TEST_CASE("first log-derivative vanishes at pi/2 for real nome") {
  const auto ctx = ThetaContext::from_nome(0.3);
  CHECK(std::abs(log_theta1_deriv(1, Complex(kPi / 2.0), ctx)) < 1e-12);
}

TEST_CASE("the two printed forms of the first log-derivative agree") {
  const auto ctx = ThetaContext::from_nome(0.5);
  const Complex z(0.7, 0.2);
  CHECK(std::abs(log_theta1_deriv(1, z, ctx) - log_theta1_deriv1_product(z, ctx)) <
        1e-12);
}

TEST_CASE("higher log-derivatives match finite differences") {
  const auto ctx = ThetaContext::from_nome(0.4);
  const Complex z(0.6, 0.1);
  const double h = 1e-5;
  for (int j = 2; j <= 5; ++j) {
    const Complex fd =
        (log_theta1_deriv(j - 1, z + h, ctx) - log_theta1_deriv(j - 1, z - h, ctx)) /
        (2.0 * h);
    CHECK(std::abs(log_theta1_deriv(j, z, ctx) - fd) < 1e-6);
  }
}

TEST_CASE("log-derivative parity under reflection") {
  const auto ctx = ThetaContext::from_nome(0.35);
  const Complex z(0.4, 0.3);
  for (int j = 1; j <= 5; ++j) {
    const Complex pos = log_theta1_deriv(j, z, ctx);
    const Complex neg = log_theta1_deriv(j, -z, ctx);
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    CHECK(std::abs(neg - sign * pos) < 1e-10 * (1.0 + std::abs(pos)));
  }
}

TEST_CASE("lattice-point rejection") {
  const auto ctx = ThetaContext::from_nome(0.3);
  CHECK_THROWS_AS(log_theta1_deriv(1, Complex(0.0), ctx), std::domain_error);
  CHECK_THROWS_AS(log_theta1_deriv(2, kPi + kPi * ctx.tau, ctx), std::domain_error);
}

TEST_CASE("dedekind eta") {
  // empty-product limit
  const auto tiny = ThetaContext::from_nome(1e-9);
  CHECK(std::abs(dedekind_eta(tiny) - std::exp(kImagUnit * kPi * tiny.tau / 12.0)) <
        1e-12);

  // logarithm of the definition
  const auto ctx = ThetaContext::from_nome(0.5);
  Complex rhs = kImagUnit * kPi * ctx.tau / 12.0;
  double q2n = 1.0;
  for (int n = 1; n <= 200; ++n) {
    q2n *= 0.25;
    rhs += std::log(1.0 - q2n);
  }
  CHECK(std::abs(std::log(dedekind_eta(ctx)) - rhs) < 1e-12);

  // eta = e^{i pi tau/12} G(q) with G evaluated independently
  const auto ctx7 = ThetaContext::from_nome(0.7);
  double g = 1.0;
  q2n = 1.0;
  for (int n = 1; n <= 400; ++n) {
    q2n *= 0.49;
    g *= 1.0 - q2n;
  }
  CHECK(std::abs(dedekind_eta(ctx7) - std::exp(kImagUnit * kPi * ctx7.tau / 12.0) * g) <
        1e-12);
}

TEST_CASE("series budget is an explicit failure") {
  SeriesTruncation trunc;
  trunc.tol = 1e-14;
  trunc.max_terms = 3;
  const auto ctx = ThetaContext::from_nome(0.9, trunc);
  CHECK_THROWS_AS(theta1(Complex(0.4, 0.1), ctx), SeriesBudgetError);
}
