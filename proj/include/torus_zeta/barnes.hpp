#pragma once

#include <string>

#include "torus_zeta/types.hpp"

namespace torus_zeta {

/// Raw parameters of the lattice zeta sum
///   zeta(s,a,b,c) = sum_{(m,n) in Z^2} (a + i b m + c n)^{-s},
/// defined for b,c > 0 and a off the lattice {i b m + c n}.
struct TorusParams {
  Complex a;
  double b = 1.0;
  double c = 1.0;
};

/// Parameters translated into the open fundamental rectangle
/// 0 < Re a < c, 0 < Im a < b, together with all derived quantities.
struct ReducedParams {
  Complex a;
  double b = 1.0;
  double c = 1.0;
  Complex A;         // a / c; 0 < Re A < 1 and 0 < Im A < b/c
  ThetaContext ctx;  // q = exp(-pi b/c), tau = i b/c
};

enum class Method {
  direct_sum,
  integral_lt1,
  parts_chain,
  closed_integer,
  closed_s1,
  zero_nonpositive,
};

std::string method_name(Method m);

struct EvalResult {
  Complex value;
  Method method = Method::direct_sum;
  double abs_err = 0.0;
};

/// Dispatch thresholds.
inline constexpr double kIntegerSnapRadius = 1e-9;
inline constexpr double kDispatchDelta = 1e-3;      // Re s < 1 - delta -> integral path
inline constexpr double kDirectSumMargin = 0.1;     // direct_sum needs Re s > 2 + margin
inline constexpr double kPartsPoleRadius = 1e-6;    // keep s away from {1..n_parts}

/// Translates a into the fundamental rectangle by integer multiples of c and
/// i*b.  Throws std::domain_error when the reduced a lands on the rectangle
/// boundary (equivalently, when a sits on or numerically at the lattice).
ReducedParams reduce_parameters(const TorusParams& p, SeriesTruncation trunc = {});

/// Rigorous bound on the absolute lattice tail beyond the centered box of
/// half-width N (integral comparison, valid for Re s > 2).
double direct_sum_tail_bound(Complex s, const ReducedParams& rp, long half_width);

/// Truncated lattice sum over |m|,|n| <= N with N chosen so the tail bound
/// stays below tol; abs_err reports that bound.  Requires Re s > 2.1.
EvalResult direct_sum(Complex s, const ReducedParams& rp, double tol,
                      long max_half_width = 4000);

/// Full-plane evaluation: snaps s to integers within 1e-9 (non-positive ->
/// exact zero, positive -> closed forms), uses the sub-critical integral
/// representation for Re s < 1 - 1e-3 and the integration-by-parts chain
/// otherwise.
EvalResult evaluate(Complex s, const ReducedParams& rp, double tol = 1e-10);

/// (sin(pi s)/pi) c^{-s} * Integral_0^1 zeta_H(s,y) d/dy ln theta1(pi[y+A];q) dy,
/// the representation valid for Re s < 1.
EvalResult eval_integral_rep(Complex s, const ReducedParams& rp, double tol);

/// The same value through `n_parts` integrations by parts, valid for
/// Re s < n_parts + 1, s bounded away from {1, ..., n_parts}.
EvalResult eval_by_parts(Complex s, const ReducedParams& rp, int n_parts, double tol);

/// Closed values at positive integers: for n >= 2
///   (-1)^{n+1} (pi/c)^n / (n-1)! * d^n/du^n ln theta1(u;q) |_{u = pi A}
/// (equivalently the derivative taken at -pi A with a fixed minus sign),
/// and at n = 1 the first-derivative term plus i*pi/c from the residue of
/// the Hurwitz pole (the log ratio across one period is -i*pi, which is
/// asserted against its continuity-tracked value).
EvalResult value_at_integer(int n, const ReducedParams& rp);

/// d/ds zeta at s=0:
///   -ln theta1(pi A; q) + (1/6) ln q + ln eta(i b/c) + pi i (1/2 - A).
Complex deriv_at_zero(const ReducedParams& rp);

/// d/ds zeta at s=-n for n >= 1, via Bernoulli-weighted combinations of the
/// log-sine and cosine moments.
Complex deriv_at_negative_integer(int n, const ReducedParams& rp, double tol = 1e-12);

/// Explicit closed forms for n = 1 and n = 2, kept as independent
/// cross-checks of deriv_at_negative_integer:
///   zeta'(-1) =  c/(2 pi i) Li_2(e^{2 pi i A}) + (c/pi)   sum_l q^{2l}/(1-q^{2l}) l^{-2} sin(2 pi l A)
///   zeta'(-2) = -c^2/(2 pi^2) Li_3(e^{2 pi i A}) - (c^2/pi^2) sum_l q^{2l}/(1-q^{2l}) l^{-3} cos(2 pi l A)
Complex deriv_neg1_closed(const ReducedParams& rp, double tol = 1e-12);
Complex deriv_neg2_closed(const ReducedParams& rp, double tol = 1e-12);

/// Closed polylogarithmic form of the log-sine moment
///   Integral_0^1 y^n ln(2 sin(pi [y + A])) dy           (Im A > 0),
/// with the empty inner sum zeroing the l = k contribution.
Complex log_sine_moment(int n, Complex A, const SeriesTruncation& trunc = {});

/// Exact trigonometric closed form of
///   Integral_0^1 y^k cos(2 pi l [y + A]) dy,
/// by endpoint evaluation of the x^k cos x / x^k sin x antiderivatives.
Complex cosine_moment(int k, int l, Complex A);

/// ln of theta1(pi(1+A)) / theta1(pi A) with the argument tracked
/// continuously along y in [0,1]; equals -i*pi for reduced parameters.
Complex theta1_log_ratio_tracked(const ReducedParams& rp);

}  // namespace torus_zeta
