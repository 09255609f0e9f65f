#include "torus_zeta/theta.hpp"

#include <cmath>
#include <vector>

namespace torus_zeta {

namespace {

constexpr double kLatticeRadius = 1e-8;

// Distance from z to the zero lattice {m*pi + n*pi*tau} of theta1.
double lattice_distance(Complex z, const ThetaContext& ctx) {
  const double ratio = ctx.tau.imag();
  const double u = z.real() / kPi;
  const double v = z.imag() / (kPi * ratio);
  const Complex nearest(kPi * std::round(u), kPi * ratio * std::round(v));
  return std::abs(z - nearest);
}

void require_off_lattice(Complex z, const ThetaContext& ctx, const char* who) {
  if (lattice_distance(z, ctx) < kLatticeRadius)
    throw std::domain_error(std::string(who) + ": z is (numerically) a zero of theta1");
}

bool tail_done(double bound, double ratio, double tol) {
  return ratio < 1.0 && bound + bound * ratio / (1.0 - ratio) < tol;
}

// d^m/dz^m of ln theta1 for m >= 2 via the exponential expansion valid in the
// open upper strip 0 < Im z < pi*Im(tau):
//   d/dz ln theta1 = -i - 2i sum_{k>=1} [e^{2ikz} - q^{2k} e^{-2ikz}] / (1 - q^{2k}),
// differentiated termwise.  Both exponentials decay geometrically strictly
// inside the strip, so the terms stay single-signed in magnitude and no
// cancellation builds up at high order.
Complex log_deriv_exponential(int order, Complex z, const ThetaContext& ctx) {
  const int m = order - 1;  // derivatives applied to the k-series above
  const double strip = ctx.strip_height();
  const double im = z.imag();
  const double gamma = 2.0 * std::min(im, strip - im);  // slowest decay rate
  const double q2 = ctx.q * ctx.q;
  const double sign_flip = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m from d^m e^{-2ikz}
  // Past k >= 2m/gamma the factor k^m grows slower than e^{gamma k / 2}
  // decays, so consecutive term bounds shrink at least by e^{-gamma/2}.
  const double settle = 2.0 * m / gamma;
  const double eff_ratio = std::exp(-0.5 * gamma);

  // Each full term is carried as one product so the decaying exponential
  // always tames the k^m growth; building (2ik)^m and e^{+-2ikz} separately
  // would overflow/underflow pairwise into NaNs at high order.
  const Complex step_up = std::exp(2.0 * kImagUnit * z);          // |.| < 1
  const Complex step_dn = q2 * std::exp(-2.0 * kImagUnit * z);    // |.| < 1
  const Complex i2m = std::pow(Complex(0.0, 2.0), m);
  Complex t_up = i2m * step_up;       // (2ik)^m e^{2ikz} at k = 1
  Complex t_dn = i2m * step_dn;       // (2ik)^m q^{2k} e^{-2ikz} at k = 1
  double q2k = 1.0;

  Complex sum = (m == 0) ? Complex(0.0, -1.0) : Complex(0.0, 0.0);
  for (long k = 1;; ++k) {
    q2k *= q2;  // underflow to 0 is harmless in 1/(1 - q2k)
    sum += -2.0 * kImagUnit * (t_up - sign_flip * t_dn) / (1.0 - q2k);
    const double bound = 4.0 * (std::abs(t_up) + std::abs(t_dn)) / (1.0 - q2);
    if (static_cast<double>(k) >= settle && tail_done(bound, eff_ratio, ctx.trunc.tol))
      break;
    if (k >= ctx.trunc.max_terms)
      throw SeriesBudgetError("log_theta1_deriv: series budget exceeded");
    const double growth = std::exp(m * std::log1p(1.0 / static_cast<double>(k)));
    t_up *= step_up * growth;
    t_dn *= step_dn * growth;
  }
  return sum;
}

// Derivatives of cot as polynomials in c = cot z, via cot' = -1 - cot^2.
// Only used for z essentially on the real axis, where the exponential form
// does not converge; orders stay small there, so the alternating
// coefficients cannot cancel destructively.
std::vector<double> cot_derivative_poly(int m) {
  std::vector<double> p{0.0, 1.0};  // cot itself
  for (int step = 0; step < m; ++step) {
    std::vector<double> d(p.size() + 1, 0.0);
    for (size_t i = 1; i < p.size(); ++i) {
      // p'(c) * (-1 - c^2)
      d[i - 1] -= static_cast<double>(i) * p[i];
      d[i + 1] -= static_cast<double>(i) * p[i];
    }
    p.swap(d);
  }
  return p;
}

Complex log_deriv_sin_series(int order, Complex z, const ThetaContext& ctx) {
  const int m = order - 1;
  if (m > 11)
    throw std::domain_error(
        "log_theta1_deriv: order too high for z this close to the real axis");
  const auto poly = cot_derivative_poly(m);
  const Complex c = std::cos(z) / std::sin(z);
  Complex cot_part = 0.0;
  Complex cp = 1.0;
  for (double coeff : poly) {
    cot_part += coeff * cp;
    cp *= c;
  }
  // termwise d^m of 4 sum q^{2n}/(1-q^{2n}) sin(2nz):
  // each term contributes 4 q^{2n}/(1-q^{2n}) (2n)^m sin(2nz + m*pi/2).
  const double q2 = ctx.q * ctx.q;
  const double strip = ctx.strip_height();
  const double gamma = 2.0 * (strip - std::abs(z.imag()));
  const double settle = std::max(1.0, 2.0 * m / gamma);
  const double eff_ratio = std::exp(-0.5 * gamma);
  Complex series = 0.0;
  double q2n = 1.0;
  double envelope = 1.0;  // q^{2n} e^{2n|Im z|}
  const double env_step = q2 * std::exp(2.0 * std::abs(z.imag()));
  for (long n = 1;; ++n) {
    q2n *= q2;
    envelope *= env_step;
    const Complex w = 2.0 * static_cast<double>(n) * z;
    Complex osc;
    switch (m % 4) {
      case 0: osc = std::sin(w); break;
      case 1: osc = std::cos(w); break;
      case 2: osc = -std::sin(w); break;
      default: osc = -std::cos(w); break;
    }
    const double scale = std::pow(2.0 * n, m);
    series += 4.0 * q2n / (1.0 - q2n) * scale * osc;
    const double bound = 4.0 * scale * envelope / (1.0 - q2);
    if (static_cast<double>(n) >= settle && tail_done(bound, eff_ratio, ctx.trunc.tol))
      break;
    if (n >= ctx.trunc.max_terms)
      throw SeriesBudgetError("log_theta1_deriv: series budget exceeded");
  }
  return cot_part + series;
}

}  // namespace

Complex theta1(Complex z, const ThetaContext& ctx) {
  const double q = ctx.q;
  const double q2 = q * q;
  const Complex cos2z = std::cos(2.0 * z);
  const double cosh2 = std::cosh(2.0 * z.imag());
  Complex prod = 1.0;
  double q2n = 1.0;
  for (long n = 1;; ++n) {
    q2n *= q2;
    prod *= (1.0 - 2.0 * q2n * cos2z + q2n * q2n) * (1.0 - q2n);
    const double dev = q2n * (2.0 * cosh2 + 1.0) + q2n * q2n;
    if (tail_done(dev, q2, ctx.trunc.tol)) break;
    if (n >= ctx.trunc.max_terms)
      throw SeriesBudgetError("theta1: series budget exceeded");
  }
  return 2.0 * std::pow(q, 0.25) * std::sin(z) * prod;
}

Complex dedekind_eta(const ThetaContext& ctx) {
  const double q2 = ctx.q * ctx.q;
  Complex prod = 1.0;
  double q2n = 1.0;
  for (long n = 1;; ++n) {
    q2n *= q2;
    prod *= 1.0 - q2n;
    if (tail_done(q2n, q2, ctx.trunc.tol)) break;
    if (n >= ctx.trunc.max_terms)
      throw SeriesBudgetError("dedekind_eta: series budget exceeded");
  }
  return std::exp(kImagUnit * kPi * ctx.tau / 12.0) * prod;
}

Complex log_theta1_fourier(Complex z, const ThetaContext& ctx) {
  const double strip = ctx.strip_height();
  if (!(z.imag() > 0.0) || !(z.imag() < strip))
    throw std::domain_error("log_theta1_fourier: Im z outside the strip (0, pi*Im tau)");
  const double q = ctx.q;
  const double q2 = q * q;
  // |cos 2nz| <= e^{2n Im z}, so terms decay like e^{-2n(strip - Im z)}.
  const double ratio = q2 * std::exp(2.0 * z.imag());
  Complex sum = 0.0;
  double q2n = 1.0, envelope = 1.0;
  for (long n = 1;; ++n) {
    q2n *= q2;
    envelope *= ratio;
    sum += q2n / (1.0 - q2n) * std::cos(2.0 * static_cast<double>(n) * z) /
           static_cast<double>(n);
    const double bound = 2.0 * envelope / (1.0 - q2);
    if (tail_done(bound, ratio, ctx.trunc.tol)) break;
    if (n >= ctx.trunc.max_terms)
      throw SeriesBudgetError("log_theta1_fourier: series budget exceeded");
  }
  return std::log(q) / 6.0 + std::log(dedekind_eta(ctx)) + std::log(2.0 * std::sin(z)) -
         2.0 * sum;
}

Complex log_theta1_deriv(int order, Complex z, const ThetaContext& ctx) {
  if (order < 1) throw std::invalid_argument("log_theta1_deriv: order must be >= 1");
  require_off_lattice(z, ctx, "log_theta1_deriv");
  const double strip = ctx.strip_height();
  if (!(std::abs(z.imag()) < strip * (1.0 - 1e-12)))
    throw std::domain_error("log_theta1_deriv: z outside the convergence strip");

  // order 1 is the cot + sin series itself, which converges strip-wide.
  if (order == 1 || std::abs(z.imag()) < 1e-6) return log_deriv_sin_series(order, z, ctx);
  if (z.imag() > 0.0) return log_deriv_exponential(order, z, ctx);
  // theta1 is odd, so the j-th log-derivative flips by (-1)^j under z -> -z.
  const Complex mirrored = log_deriv_exponential(order, -z, ctx);
  return (order % 2 == 0) ? mirrored : -mirrored;
}

Complex log_theta1_deriv1_product(Complex z, const ThetaContext& ctx) {
  require_off_lattice(z, ctx, "log_theta1_deriv1_product");
  const double q2 = ctx.q * ctx.q;
  const Complex sin2z = std::sin(2.0 * z);
  const Complex cos2z = std::cos(2.0 * z);
  const double cosh2 = std::cosh(2.0 * z.imag());
  Complex sum = 0.0;
  double q2n = 1.0;
  for (long n = 1;; ++n) {
    q2n *= q2;
    sum += q2n * sin2z / (1.0 - 2.0 * q2n * cos2z + q2n * q2n);
    // once the remaining denominators are provably >= 1/2, a geometric bound
    // on the numerators covers the tail
    const double head = q2n * q2 * (2.0 * cosh2 + 1.0);
    const double bound = 4.0 * q2n * q2 * std::abs(sin2z);
    if (head < 0.25 && tail_done(bound, q2, ctx.trunc.tol)) break;
    if (n >= ctx.trunc.max_terms)
      throw SeriesBudgetError("log_theta1_deriv1_product: series budget exceeded");
  }
  return std::cos(z) / std::sin(z) + 4.0 * sum;
}

}  // namespace torus_zeta
