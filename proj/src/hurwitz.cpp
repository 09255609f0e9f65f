#include "torus_zeta/hurwitz.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "torus_zeta/bernoulli.hpp"

namespace torus_zeta {

namespace {

constexpr int kMaxCorrections = 30;

// B_{2j} / (2j)! for the Euler-Maclaurin correction series.
double b2j_over_factorial(int j) {
  static const std::array<double, kMaxCorrections + 2> table = [] {
    std::array<double, kMaxCorrections + 2> t{};
    Rational fact = 1;
    for (int j = 0; j < static_cast<int>(t.size()); ++j) {
      if (j > 0) fact *= Rational(2 * j) * Rational(2 * j - 1);
      t[j] = static_cast<double>(bernoulli_rational(2 * j) / fact);
    }
    return t;
  }();
  return table[j];
}

Complex real_pow(double base, Complex expo) {
  // base > 0, principal branch.
  return std::exp(expo * std::log(base));
}

}  // namespace

Complex hurwitz_zeta(Complex s, double y, double tol) {
  if (!(y > 0.0) || y > 2.0)
    throw std::domain_error("hurwitz_zeta: y must lie in (0, 2]");
  if (std::abs(s - Complex(1.0)) < kHurwitzPoleRadius)
    throw std::domain_error("hurwitz_zeta: s too close to the pole at 1");
  if (!(tol > 0.0)) throw std::invalid_argument("hurwitz_zeta: tol must be positive");

  const double sigma = s.real();
  // Grow the head until the correction-series remainder bound is met.  A
  // short head keeps (N+y)^{|Re s|}-sized intermediates small, which matters
  // for accuracy at negative Re s: there the correction series terminates
  // (Pochhammer hits zero) and even N = 0 is exact.
  long n_head = 0;

  for (int attempt = 0;; ++attempt) {
    Complex head = 0.0;
    for (long k = 0; k < n_head; ++k) head += real_pow(k + y, -s);

    const double x = static_cast<double>(n_head) + y;
    Complex total = head + real_pow(x, 1.0 - s) / (s - 1.0) + 0.5 * real_pow(x, -s);

    // Correction series: B_{2j}/(2j)! * (s)_{2j-1} * x^{-s-2j+1}.  The terms
    // first shrink, then diverge; the remainder is bounded by the first
    // omitted term times |s+2M+1|/(sigma+2M+1).
    Complex poch = s;                       // (s)_{2j-1} at j = 1
    Complex xp = real_pow(x, -s - 1.0);     // x^{-s-2j+1} at j = 1
    Complex corr = 0.0;
    Complex best = total;
    double best_bound = std::numeric_limits<double>::infinity();
    double prev_bound = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= kMaxCorrections; ++j) {
      corr += b2j_over_factorial(j) * poch * xp;
      const Complex poch_next = poch * (s + (2.0 * j - 1.0)) * (s + (2.0 * j));
      const double denom = sigma + 2.0 * j + 1.0;
      if (denom <= 0.0) {
        poch = poch_next;
        xp /= x * x;
        continue;  // bound not yet valid; keep accumulating
      }
      const double bound = std::abs(b2j_over_factorial(j + 1)) * std::abs(poch_next) *
                           std::abs(xp) / (x * x) * (std::abs(s + (2.0 * j + 1.0)) / denom);
      if (bound < best_bound) {
        best_bound = bound;
        best = total + corr;
      }
      if (bound < tol) return total + corr;
      if (bound > prev_bound && j > 2) break;  // asymptotic divergence set in
      prev_bound = bound;
      poch = poch_next;
      xp /= x * x;
    }
    if (best_bound < tol) return best;
    if (n_head > 100000)
      throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin failed to reach tolerance");
    n_head = (n_head == 0) ? 1 : 2 * n_head;
    (void)attempt;
  }
}

}  // namespace torus_zeta
