#pragma once

#include "torus_zeta/types.hpp"

namespace torus_zeta {

/// First Jacobi theta function, infinite-product form:
///   theta1(z;q) = 2 q^{1/4} sin z * prod_{n>=1} (1 - 2 q^{2n} cos 2z + q^{4n})(1 - q^{2n}).
/// Entire in z; truncated once the factors are within ctx.trunc.tol of 1.
Complex theta1(Complex z, const ThetaContext& ctx);

/// ln theta1(z;q) by its Fourier-type expansion, valid in the open strip
/// 0 < Im z < pi*Im(tau):
///   (1/6) ln q + ln eta(tau) + ln(2 sin z) - 2 sum_{n>=1} q^{2n}/(1-q^{2n}) cos(2nz)/n,
/// principal branch for ln(2 sin z).  Throws outside the strip.
Complex log_theta1_fourier(Complex z, const ThetaContext& ctx);

/// j-th derivative of ln theta1(z;q) with respect to z, for |Im z| inside the
/// convergence strip and z away from the zero lattice m*pi + n*pi*tau.
Complex log_theta1_deriv(int order, Complex z, const ThetaContext& ctx);

/// First log-derivative in its algebraically equivalent product-derived form
///   cot z + 4 sum_{n>=1} q^{2n} sin 2z / (1 - 2 q^{2n} cos 2z + q^{4n}),
/// which converges for every z off the zero lattice.  Kept as an independent
/// cross-check of log_theta1_deriv(1, ...).
Complex log_theta1_deriv1_product(Complex z, const ThetaContext& ctx);

/// Dedekind eta: e^{i pi tau / 12} * prod_{n>=1} (1 - q^{2n}).
Complex dedekind_eta(const ThetaContext& ctx);

}  // namespace torus_zeta
