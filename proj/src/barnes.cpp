#include "torus_zeta/barnes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "torus_zeta/hurwitz.hpp"
#include "torus_zeta/quadrature.hpp"
#include "torus_zeta/theta.hpp"

namespace torus_zeta {

namespace {

const Complex kIPi = kImagUnit * kPi;

Complex complex_pow(Complex w, Complex s) { return std::exp(s * std::log(w)); }

// w^{-n} for integer n >= 1 by binary exponentiation; much cheaper than the
// general complex power on the hot lattice-sum path.
Complex inverse_int_pow(Complex w, long n) {
  Complex acc = 1.0, base = w;
  long e = n;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return 1.0 / acc;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// g(y) = ln theta1(pi (y + A); q) and its derivatives, the common integrand
// factor of every representation below.
Complex g_deriv(int j, double y, const ReducedParams& rp) {
  return std::pow(kPi, j) * log_theta1_deriv(j, kPi * (y + rp.A), rp.ctx);
}

// Distance from the real point `center` to the nearest singularity of g in
// the complex y-plane (the theta zeros sit at y = m + i n b/c - A).
double singularity_distance(const ReducedParams& rp, double center) {
  const double ratio = rp.b / rp.c;
  double d = std::numeric_limits<double>::infinity();
  for (int m = -2; m <= 3; ++m)
    for (int n = -2; n <= 2; ++n)
      d = std::min(d, std::abs(Complex(m, n * ratio) - rp.A - center));
  return d;
}

// Taylor coefficients a_i = (g')^{(i)}(center) / i! via a trapezoidal Cauchy
// integral around a circle of the given radius.  g' is sampled through the
// product-form series, which converges for every off-lattice z, so the
// circle may leave the Fourier strip.  High-order termwise differentiation
// would lose ~(growth)^i digits to cancellation; here the error per
// coefficient stays ~eps * max|g'| / radius^i, which the h^i factors of the
// consumers turn into a geometrically decaying contribution.
std::vector<Complex> gprime_taylor(const ReducedParams& rp, double center,
                                   double radius, int count) {
  constexpr int kSamples = 512;
  std::vector<Complex> samples(kSamples);
  for (int j = 0; j < kSamples; ++j) {
    const double th = 2.0 * kPi * j / kSamples;
    const Complex y = center + radius * std::exp(Complex(0.0, th));
    samples[j] = kPi * log_theta1_deriv1_product(kPi * (y + rp.A), rp.ctx);
  }
  std::vector<Complex> coeff(count, Complex(0.0));
  for (int j = 0; j < kSamples; ++j) {
    const Complex root = std::exp(Complex(0.0, -2.0 * kPi * j / kSamples));
    Complex w = 1.0;
    for (int i = 0; i < count; ++i) {
      coeff[i] += samples[j] * w;
      w *= root;
    }
  }
  double rpow = 1.0;
  for (int i = 0; i < count; ++i) {
    coeff[i] /= kSamples * rpow;
    rpow *= radius;
  }
  return coeff;
}

struct WeightedIntegral {
  Complex value;
  double abs_err;
};

// Integral_0^1 y^mu g^{(j0)}(y) dy for Re mu > -1.  The possibly singular
// weight at y=0 is handled exactly: on [0,h] (h inside the Taylor radius of
// g at 0) expand g^{(j0)} and integrate y^{mu+m} termwise; the remainder
// [h,1] is smooth and goes to the adaptive rule.
WeightedIntegral weighted_endpoint_integral(Complex mu, int j0, const ReducedParams& rp,
                                            double tol) {
  if (!(mu.real() > -1.0))
    throw std::domain_error("weighted_endpoint_integral: Re mu must exceed -1");
  const double d0 = singularity_distance(rp, 0.0);
  const double h = std::min(0.35 * d0, 0.5);

  constexpr int kMaxTerms = 88;
  const std::vector<Complex> a =
      gprime_taylor(rp, 0.0, 0.7 * d0, j0 + kMaxTerms);

  Complex taylor = 0.0;
  double tail_err = tol;  // assigned on the break below
  {
    Complex hpow = std::exp((mu + 1.0) * std::log(Complex(h)));  // h^{mu+m+1}
    // g^{(j0+m)}(0)/m! = a_{j0+m-1} * (j0+m-1)! / m!
    double fact_ratio = 1.0;
    for (int i = 2; i < j0; ++i) fact_ratio *= i;  // (j0-1)!
    int quiet = 0;
    bool done = false;
    double peak = 0.0;
    for (int m = 0; m + j0 <= static_cast<int>(a.size()); ++m) {
      if (m > 0) {
        hpow *= h;
        fact_ratio *= static_cast<double>(j0 + m - 1) / static_cast<double>(m);
      }
      const Complex term = a[j0 + m - 1] * fact_ratio * hpow / (mu + (m + 1.0));
      taylor += term;
      peak = std::max(peak, std::abs(term));
      if (m >= j0 + 4) {
        // the double-precision floor scales with the largest term handled
        quiet = (std::abs(term) < tol / 8.0 + 1e-14 * peak) ? quiet + 1 : 0;
        if (quiet >= 3) {
          tail_err = std::abs(term) + 1e-14 * peak;  // ratio <= ~0.5 past here
          done = true;
          break;
        }
      }
    }
    if (!done)
      throw ConvergenceError("weighted_endpoint_integral: endpoint expansion stalled");
  }

  const auto integrand = [&](double y) {
    return std::exp(mu * std::log(y)) * g_deriv(j0, y, rp);
  };
  double scale = 0.0;
  for (double y : {h, 0.5 * (h + 1.0), 1.0})
    scale = std::max(scale, std::abs(integrand(y)));
  const QuadResult outer = integrate(integrand, h, 1.0, std::max(tol, 5e-14 * scale));

  return {taylor + outer.value, tail_err + outer.abs_err};
}

// Integral_0^1 zeta_H(s, y+1) g'(y) dy; entire in s apart from the Hurwitz
// pole at s=1 shared by the whole representation.
QuadResult holomorphic_part(Complex s, const ReducedParams& rp, double tol) {
  const double hz_tol = std::max(tol / 40.0, 1e-15);
  QuadResult r = integrate_01(
      [&](double y) { return hurwitz_zeta(s, y + 1.0, hz_tol) * g_deriv(1, y, rp); },
      tol);
  r.abs_err += 4.0 * hz_tol;  // Hurwitz tolerance times a bound on ||g'||_1
  return r;
}

Complex prefactor(Complex s, const ReducedParams& rp) {
  return std::sin(kPi * s) / kPi * std::exp(-s * std::log(rp.c));
}

double near_one_inflation(Complex s, double value_scale) {
  const double dist = std::abs(s - Complex(1.0));
  if (dist >= 0.1) return 0.0;
  return 1e-13 * (1.0 + value_scale) / dist;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::direct_sum: return "direct_sum";
    case Method::integral_lt1: return "integral_lt1";
    case Method::parts_chain: return "parts_chain";
    case Method::closed_integer: return "closed_integer";
    case Method::closed_s1: return "closed_s1";
    case Method::zero_nonpositive: return "zero_nonpositive";
  }
  return "unknown";
}

ReducedParams reduce_parameters(const TorusParams& p, SeriesTruncation trunc) {
  if (!(p.b > 0.0) || !(p.c > 0.0))
    throw std::invalid_argument("reduce_parameters: b and c must be positive");
  if (!std::isfinite(p.a.real()) || !std::isfinite(p.a.imag()))
    throw std::invalid_argument("reduce_parameters: a must be finite");
  const double re = p.a.real() - std::floor(p.a.real() / p.c) * p.c;
  const double im = p.a.imag() - std::floor(p.a.imag() / p.b) * p.b;
  const double eps = 1e-12;
  if (re < eps * p.c || re > (1.0 - eps) * p.c || im < eps * p.b || im > (1.0 - eps) * p.b)
    throw std::domain_error(
        "reduce_parameters: a reduces onto the fundamental-rectangle boundary");
  ReducedParams rp;
  rp.a = Complex(re, im);
  rp.b = p.b;
  rp.c = p.c;
  rp.A = rp.a / p.c;
  rp.ctx = ThetaContext::from_ratio(p.b / p.c, trunc);
  return rp;
}

double direct_sum_tail_bound(Complex s, const ReducedParams& rp, long half_width) {
  // Points on the ring max(|m|,|n|) = k keep |a + ibm + cn| >= d(k-1) with
  // d = min(b,c); comparing the 8k-point rings with the integral gives the
  // bound below, valid for Re s > 2.
  const double sigma = s.real();
  const double d = std::min(rp.b, rp.c);
  const double phase = std::exp(kPi * std::abs(s.imag()));
  const double n1 = static_cast<double>(half_width - 1);
  return 8.0 * phase * std::pow(d, -sigma) *
         (std::pow(n1, 2.0 - sigma) / (sigma - 2.0) +
          std::pow(n1, 1.0 - sigma) / (sigma - 1.0));
}

EvalResult direct_sum(Complex s, const ReducedParams& rp, double tol, long max_half_width) {
  if (!(s.real() > 2.0 + kDirectSumMargin))
    throw std::domain_error("direct_sum: requires Re s > 2.1");
  if (!(tol > 0.0)) throw std::invalid_argument("direct_sum: tol must be positive");

  long n = 4;
  while (direct_sum_tail_bound(s, rp, n) > tol) {
    if (n >= max_half_width)
      throw SeriesBudgetError("direct_sum: required truncation exceeds the budget");
    n = std::min(max_half_width, 2 * n);
  }

  const double rs = std::round(s.real());
  const bool integer_s =
      std::abs(s.imag()) == 0.0 && std::abs(s.real() - rs) < 1e-12 && rs > 0 && rs < 64;
  auto term = [&](long m, long nn) {
    const Complex w = rp.a + Complex(0.0, rp.b * static_cast<double>(m)) +
                      rp.c * static_cast<double>(nn);
    return integer_s ? inverse_int_pow(w, static_cast<long>(rs)) : complex_pow(w, -s);
  };

  // Accumulate rings from the outside in so small terms are added first.
  Complex sum = 0.0;
  for (long k = n; k >= 1; --k) {
    Complex ring = 0.0;
    for (long j = -k; j <= k; ++j) ring += term(k, j) + term(-k, j);
    for (long j = -k + 1; j <= k - 1; ++j) ring += term(j, k) + term(j, -k);
    sum += ring;
  }
  sum += term(0, 0);
  return {sum, Method::direct_sum, direct_sum_tail_bound(s, rp, n)};
}

EvalResult eval_integral_rep(Complex s, const ReducedParams& rp, double tol) {
  if (!(s.real() < 1.0))
    throw std::domain_error("eval_integral_rep: requires Re s < 1");
  // zeta_H(s,y) = y^{-s} + zeta_H(s,y+1) splits the integrand into the
  // endpoint-weighted piece and an entire remainder.
  const WeightedIntegral head = weighted_endpoint_integral(-s, 1, rp, tol / 4.0);
  const QuadResult rest = holomorphic_part(s, rp, tol / 4.0);
  const Complex pref = prefactor(s, rp);
  const Complex value = pref * (head.value + rest.value);
  double err = std::abs(pref) * (head.abs_err + rest.abs_err) +
               near_one_inflation(s, std::abs(value));
  return {value, Method::integral_lt1, err};
}

EvalResult eval_by_parts(Complex s, const ReducedParams& rp, int n_parts, double tol) {
  if (n_parts < 1) throw std::invalid_argument("eval_by_parts: n_parts must be >= 1");
  if (!(s.real() < n_parts + 1.0))
    throw std::domain_error("eval_by_parts: requires Re s < n_parts + 1");
  for (int j = 1; j <= n_parts; ++j)
    if (std::abs(s - Complex(j)) < kPartsPoleRadius)
      throw std::domain_error("eval_by_parts: s too close to an integer in 1..n_parts");

  // T_j = Integral_0^1 y^{j-s} g^{(j+1)} dy obeys
  //   T_j = (g^{(j+1)}(1) - T_{j+1}) / (j+1-s),
  // so T_{n_parts} from quadrature walks back to T_0, the continuation of
  // the endpoint-weighted piece.
  const WeightedIntegral deep =
      weighted_endpoint_integral(Complex(n_parts) - s, n_parts + 1, rp, tol / 4.0);
  const std::vector<Complex> a1 =
      gprime_taylor(rp, 1.0, 0.7 * singularity_distance(rp, 1.0), n_parts);
  Complex t = deep.value;
  double terr = deep.abs_err;
  double jfact = factorial(n_parts - 1);
  for (int j = n_parts - 1; j >= 0; --j) {
    const Complex boundary = a1[j] * jfact;  // g^{(j+1)}(1) = j! a_j
    if (j > 0) jfact /= j;
    const double inv = 1.0 / std::abs(Complex(j + 1) - s);
    t = (boundary - t) / (Complex(j + 1) - s);
    terr = (terr + 1e-15 * std::abs(boundary)) * inv;
  }

  const QuadResult rest = holomorphic_part(s, rp, tol / 4.0);
  const Complex pref = prefactor(s, rp);
  const Complex value = pref * (t + rest.value);
  double err = std::abs(pref) * (terr + rest.abs_err) +
               near_one_inflation(s, std::abs(value));
  return {value, Method::parts_chain, err};
}

EvalResult value_at_integer(int n, const ReducedParams& rp) {
  if (n < 1) throw std::invalid_argument("value_at_integer: n must be >= 1");
  const Complex z0 = kPi * rp.A;
  if (n >= 2) {
    // Residue of the contour representation at u = 0, taken clockwise:
    //   -(pi/c)^n / (n-1)! * d^n ln theta1 |_{-pi A},
    // which by theta1-parity is (-1)^{n+1} times the same derivative at +pi A.
    // (The lattice-sum oracle pins the sign for even n.)
    const double sign = (n % 2 == 0) ? -1.0 : 1.0;
    const Complex v = sign * std::pow(kPi / rp.c, n) / factorial(n - 1) *
                      log_theta1_deriv(n, z0, rp.ctx);
    return {v, Method::closed_integer, 1e-12 * (1.0 + std::abs(v))};
  }
  // n = 1: the boundary term plus the residue contribution. The log ratio of
  // theta1 across one period equals -i*pi; recompute it with continuity
  // tracking and insist the two agree before using the constant.
  const Complex tracked = theta1_log_ratio_tracked(rp);
  const double drift = std::abs(tracked - (-kIPi));
  if (drift > 1e-9)
    throw ConvergenceError("value_at_integer: tracked log ratio drifted from -i*pi");
  const Complex v = (kPi / rp.c) * log_theta1_deriv(1, z0, rp.ctx) + kIPi / rp.c;
  return {v, Method::closed_s1, 1e-12 * (1.0 + std::abs(v)) + drift / rp.c};
}

EvalResult evaluate(Complex s, const ReducedParams& rp, double tol) {
  const double rs = std::round(s.real());
  if (std::abs(s - Complex(rs)) < kIntegerSnapRadius) {
    const long n = static_cast<long>(rs);
    if (n <= 0) return {Complex(0.0, 0.0), Method::zero_nonpositive, 0.0};
    return value_at_integer(static_cast<int>(n), rp);
  }
  if (s.real() < 1.0 - kDispatchDelta) return eval_integral_rep(s, rp, tol);
  const int n_parts = static_cast<int>(std::ceil(s.real())) + 1;
  return eval_by_parts(s, rp, n_parts, tol);
}

Complex theta1_log_ratio_tracked(const ReducedParams& rp) {
  // Accumulate principal logs of small ratios theta1(z_{k+1})/theta1(z_k)
  // along y in [0,1]; halve the step wherever the ratio swings too far.
  Complex total = 0.0;
  double y = 0.0;
  double step = 1.0 / 64.0;
  Complex current = theta1(kPi * (y + rp.A), rp.ctx);
  int halvings = 0;
  while (y < 1.0) {
    const double next = std::min(1.0, y + step);
    const Complex candidate = theta1(kPi * (next + rp.A), rp.ctx);
    const Complex ratio = candidate / current;
    if (std::abs(std::arg(ratio)) > 1.0 && halvings < 40) {
      step *= 0.5;
      ++halvings;
      continue;
    }
    total += std::log(ratio);
    current = candidate;
    y = next;
  }
  return total;
}

}  // namespace torus_zeta
