#include "torus_zeta/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace torus_zeta {

namespace {

using Integer = boost::multiprecision::cpp_int;

Integer binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace

const Rational& bernoulli_rational(int k) {
  if (k < 0) throw std::invalid_argument("bernoulli_rational: k must be >= 0");
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  // B_n = -1/(n+1) * sum_{j<n} C(n+1,j) B_j, the recurrence behind
  // sum_{j<=n} C(n+1,j) B_j = 0.
  while (static_cast<int>(cache.size()) <= k) {
    const int n = static_cast<int>(cache.size());
    Rational acc = 0;
    for (int j = 0; j < n; ++j) acc += Rational(binomial_int(n + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(n + 1));
  }
  return cache[k];
}

double bernoulli_number(int k) { return static_cast<double>(bernoulli_rational(k)); }

double binomial(int n, int k) {
  return static_cast<double>(binomial_int(n, k));
}

Complex bernoulli_poly(int n, Complex x) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: n must be >= 0");
  Complex acc = 0.0;
  Complex xpow = 1.0;  // x^{n-k}, built from the constant term upward
  for (int k = n; k >= 0; --k) {
    acc += binomial(n, k) * bernoulli_number(k) * xpow;
    xpow *= x;
  }
  return acc;
}

}  // namespace torus_zeta
