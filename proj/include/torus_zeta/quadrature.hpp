#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "torus_zeta/types.hpp"

namespace torus_zeta {

struct QuadResult {
  Complex value{0.0, 0.0};
  double abs_err = 0.0;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (7,15) integration of a smooth complex-valued
/// integrand over [0,1].  Deterministic for fixed inputs.  Throws
/// ConvergenceError if `tol` is unreachable within the evaluation budget or
/// the integrand returns a non-finite value.
QuadResult integrate_01(const std::function<Complex(double)>& f, double tol,
                        long max_evaluations = 1000000);

/// Same rule over an arbitrary finite interval [lo, hi].
QuadResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                     double tol, long max_evaluations = 1000000);

namespace detail {

// Kronrod-15 abscissae/weights with the embedded Gauss-7 rule (odd-index
// nodes).  QUADPACK values.
template <typename Real>
struct Gk15Nodes {
  static constexpr std::array<Real, 8> xgk = {
      Real(0.991455371120812639206854697526329L), Real(0.949107912342758524526189684047851L),
      Real(0.864864423359769072789712788640926L), Real(0.741531185599394439863864773280788L),
      Real(0.586087235467691130294144838258730L), Real(0.405845151377397166906606412076961L),
      Real(0.207784955007898467600689403773245L), Real(0.0L)};
  static constexpr std::array<Real, 8> wgk = {
      Real(0.022935322010529224963732008058970L), Real(0.063092092629978553290700663189204L),
      Real(0.104790010322250183839876322541518L), Real(0.140653259715525918745189590510238L),
      Real(0.169004726639267902826583426598550L), Real(0.190350578064785409913256402421014L),
      Real(0.204432940075298892414161999234649L), Real(0.209482141084727828012999174891714L)};
  static constexpr std::array<Real, 4> wg = {
      Real(0.129484966168869693270611432679082L), Real(0.279705391489276667901467771423780L),
      Real(0.381830050505118944950369775488975L), Real(0.417959183673469387755102040816327L)};
};

// One (7,15) panel on [lo,hi]: returns the Kronrod value and |K15-G7|.
template <typename Real, typename F>
void gk15_panel(const F& f, Real lo, Real hi, std::complex<Real>& value, Real& err) {
  using C = std::complex<Real>;
  const auto& nodes = Gk15Nodes<Real>{};
  const Real half = (hi - lo) / Real(2);
  const Real mid = (lo + hi) / Real(2);
  C k15{0, 0}, g7{0, 0};
  for (int i = 0; i < 7; ++i) {
    const C fp = f(mid + half * nodes.xgk[i]);
    const C fm = f(mid - half * nodes.xgk[i]);
    k15 += nodes.wgk[i] * (fp + fm);
    if (i % 2 == 1) g7 += nodes.wg[i / 2] * (fp + fm);
  }
  const C fc = f(mid);
  k15 += nodes.wgk[7] * fc;
  g7 += nodes.wg[3] * fc;
  value = half * k15;
  err = std::abs(half * (k15 - g7));
}

}  // namespace detail

}  // namespace torus_zeta
