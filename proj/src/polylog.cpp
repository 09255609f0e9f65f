#include "torus_zeta/polylog.hpp"

#include <cmath>

namespace torus_zeta {

Complex polylog(int order, Complex z, const SeriesTruncation& trunc, double margin) {
  if (order < 1) throw std::invalid_argument("polylog: order must be >= 1");
  trunc.validate();
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  if (r >= 1.0 - margin)
    throw std::domain_error("polylog: |z| too close to the unit circle");
  Complex sum = 0.0;
  Complex zk = 1.0;
  double rk = 1.0;
  for (long k = 1;; ++k) {
    zk *= z;
    rk *= r;
    sum += zk / std::pow(static_cast<double>(k), order);
    // tail <= |z|^{k+1} / ((k+1)^order (1-|z|))
    const double tail = rk * r / (std::pow(k + 1.0, order) * (1.0 - r));
    if (tail < trunc.tol) break;
    if (k >= trunc.max_terms) throw SeriesBudgetError("polylog: series budget exceeded");
  }
  return sum;
}

}  // namespace torus_zeta
