#pragma once

#include "torus_zeta/types.hpp"

namespace torus_zeta {

/// Polylogarithm Li_n(z) = sum_{k>=1} z^k / k^n for integer n >= 1 and
/// |z| < 1 - margin.  The truncation error is bounded by
/// |z|^{K+1} / ((K+1)^n (1-|z|)) after K terms.
Complex polylog(int order, Complex z, const SeriesTruncation& trunc = {},
                double margin = 1e-6);

}  // namespace torus_zeta
