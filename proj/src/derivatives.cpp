#include <cmath>
#include <vector>

#include "torus_zeta/barnes.hpp"
#include "torus_zeta/bernoulli.hpp"
#include "torus_zeta/polylog.hpp"
#include "torus_zeta/theta.hpp"

namespace torus_zeta {

namespace {

const Complex kIPi = kImagUnit * kPi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Complex cpow_int(Complex base, int e) {
  if (e < 0) return 1.0 / cpow_int(base, -e);
  Complex acc = 1.0, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

bool tail_done(double bound, double ratio, double tol) {
  return ratio < 1.0 && bound + bound * ratio / (1.0 - ratio) < tol;
}

// sum_l q^{2l}/(1-q^{2l}) * weight(l); |weight(l)| <= growth^l * scale(l)
// with growth = e^{2 pi Im A}, so the terms decay like (q^2 growth)^l.
template <typename WeightFn, typename ScaleFn>
Complex lambert_weighted_sum(const ReducedParams& rp, double tol, const WeightFn& weight,
                             const ScaleFn& scale) {
  const double q2 = rp.ctx.q * rp.ctx.q;
  const double rho = q2 * std::exp(2.0 * kPi * rp.A.imag());
  Complex sum = 0.0;
  double q2l = 1.0, envelope = 1.0;
  for (long l = 1;; ++l) {
    q2l *= q2;
    envelope *= rho;
    sum += q2l / (1.0 - q2l) * weight(l);
    const double bound = envelope * scale(l) / (1.0 - q2);
    if (tail_done(bound, rho, tol)) break;
    if (l >= rp.ctx.trunc.max_terms)
      throw SeriesBudgetError("derivative series: budget exceeded");
  }
  return sum;
}

}  // namespace

Complex cosine_moment(int k, int l, Complex A) {
  if (k < 0) throw std::invalid_argument("cosine_moment: k must be >= 0");
  if (l < 1) throw std::invalid_argument("cosine_moment: l must be >= 1");
  // Substituting x = 2 pi l (y + A) reduces the moment to
  //   w^{-k-1} [cos(wA) C_k + sin(wA) S_k],  w = 2 pi l,
  // with C_k = Int_0^w x^k cos x dx and S_k = Int_0^w x^k sin x dx evaluated
  // from the standard antiderivatives at the endpoints (cos w = 1, sin w = 0).
  // Long double keeps the e^{2 pi l Im A}-sized intermediates accurate.
  using LD = long double;
  using CLD = std::complex<LD>;
  const LD pi_ld = 3.141592653589793238462643383279502884L;
  const LD w = 2.0L * pi_ld * static_cast<LD>(l);

  LD cos_int = 0.0L;
  for (int j = 0; 2 * j + 1 <= k; ++j) {
    LD fall = 1.0L;  // k!/(k-2j-1)!
    for (int i = k; i > k - 2 * j - 1; --i) fall *= i;
    cos_int += ((j % 2 == 0) ? fall : -fall) * std::pow(w, static_cast<LD>(k - 2 * j - 1));
  }
  if (k % 2 == 1) {
    const LD kf = static_cast<LD>(factorial(k));
    cos_int -= (((k - 1) / 2) % 2 == 0) ? kf : -kf;
  }

  LD sin_int = 0.0L;
  for (int j = 0; 2 * j <= k; ++j) {
    LD fall = 1.0L;  // k!/(k-2j)!
    for (int i = k; i > k - 2 * j; --i) fall *= i;
    sin_int -= ((j % 2 == 0) ? fall : -fall) * std::pow(w, static_cast<LD>(k - 2 * j));
  }
  if (k % 2 == 0) {
    const LD kf = static_cast<LD>(factorial(k));
    sin_int += ((k / 2) % 2 == 0) ? kf : -kf;
  }

  // cos(x + wA) = cos x cos(wA) - sin x sin(wA)
  const CLD arg = w * CLD(A.real(), A.imag());
  const CLD value =
      (std::cos(arg) * cos_int - std::sin(arg) * sin_int) / std::pow(w, static_cast<LD>(k + 1));
  return Complex(static_cast<double>(value.real()), static_cast<double>(value.imag()));
}

Complex log_sine_moment(int n, Complex A, const SeriesTruncation& trunc) {
  if (n < 0) throw std::invalid_argument("log_sine_moment: n must be >= 0");
  if (!(A.imag() > 0.0)) throw std::domain_error("log_sine_moment: requires Im A > 0");
  const Complex z = std::exp(2.0 * kIPi * A);

  std::vector<Complex> li(n + 3, 0.0);
  for (int order = 2; order <= n + 2; ++order) li[order] = polylog(order, z, trunc);

  Complex total =
      -kIPi * static_cast<double>(n) / (2.0 * (n + 1.0) * (n + 2.0)) - kIPi * A / (n + 1.0);
  Complex outer = 0.0;
  for (int k = 1; k <= n + 1; ++k) {
    Complex inner = 0.0;
    for (int l = 1; l < k; ++l) {  // the l = k term carries an empty inner sum
      Complex jsum = 0.0;
      for (int j = 1; j <= k - l; ++j) jsum += binomial(k - l, j) * cpow_int(A, -j);
      inner += factorial(k) / factorial(k - l) * cpow_int(kImagUnit / (2.0 * kPi * A), l) *
               jsum * li[l + 1];
    }
    outer += binomial(n + 1, k) * ((k % 2 == 0) ? 1.0 : -1.0) * inner;
  }
  total += cpow_int(-A, n + 1) / (n + 1.0) * outer;
  return total;
}

Complex deriv_at_zero(const ReducedParams& rp) {
  const Complex log_t1 = log_theta1_fourier(kPi * rp.A, rp.ctx);
  const Complex shared = -log_t1 + std::log(rp.ctx.q) / 6.0 +
                         std::log(dedekind_eta(rp.ctx));
  const Complex closed = shared + kIPi * (0.5 - rp.A);
  const Complex via_moment = shared + kIPi * 0.5 + log_sine_moment(0, rp.A, rp.ctx.trunc);
  if (std::abs(closed - via_moment) > 1e-10)
    throw ConvergenceError("deriv_at_zero: closed form and moment form disagree");
  return closed;
}

Complex deriv_at_negative_integer(int n, const ReducedParams& rp, double tol) {
  if (n < 1) throw std::invalid_argument("deriv_at_negative_integer: n must be >= 1");
  const Complex A = rp.A;
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;  // (-1)^n
  const double cn = std::pow(rp.c, n);
  const double series_tol = tol / (2.0 * (n + 1.0));

  Complex acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    Complex bracket = log_sine_moment(n - k, A, rp.ctx.trunc);
    bracket -= 2.0 * lambert_weighted_sum(
                         rp, series_tol,
                         [&](long l) {
                           return cosine_moment(n - k, static_cast<int>(l), A) /
                                  static_cast<double>(l);
                         },
                         [](long l) { return 1.0 / static_cast<double>(l); });
    acc += binomial(n + 1, k) * (n - k + 1.0) * bernoulli_number(k) * bracket;
  }
  return kIPi * sign * cn * bernoulli_number(n + 1) / (n + 1.0) +
         sign * cn / (n + 1.0) * acc;
}

Complex deriv_neg1_closed(const ReducedParams& rp, double tol) {
  // c/(2 pi i) Li_2(e^{2 pi i A}) + (c/pi) sum_l q^{2l}/(1-q^{2l}) l^{-2} sin(2 pi l A);
  // the sign of the sine series follows the finite-difference oracle.
  const Complex z = std::exp(2.0 * kIPi * rp.A);
  const Complex li2 = polylog(2, z, rp.ctx.trunc);
  const Complex series = lambert_weighted_sum(
      rp, tol,
      [&](long l) {
        return std::sin(2.0 * kPi * static_cast<double>(l) * rp.A) /
               static_cast<double>(l * l);
      },
      [](long l) { return 1.0 / static_cast<double>(l * l); });
  return rp.c / (2.0 * kIPi) * li2 + rp.c / kPi * series;
}

Complex deriv_neg2_closed(const ReducedParams& rp, double tol) {
  const Complex z = std::exp(2.0 * kIPi * rp.A);
  const Complex li3 = polylog(3, z, rp.ctx.trunc);
  const Complex series = lambert_weighted_sum(
      rp, tol,
      [&](long l) {
        return std::cos(2.0 * kPi * static_cast<double>(l) * rp.A) /
               static_cast<double>(l * l * l);
      },
      [](long l) { return 1.0 / static_cast<double>(l * l * l); });
  const double c2 = rp.c * rp.c;
  return -c2 / (2.0 * kPi * kPi) * li3 - c2 / (kPi * kPi) * series;
}

}  // namespace torus_zeta
