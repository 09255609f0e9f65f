#pragma once

#include <string>
#include <vector>

#include "torus_zeta/barnes.hpp"

namespace torus_zeta::oracles {

/// One verified identity: |lhs - rhs| against a tolerance.
struct OracleReport {
  std::string name;
  Complex lhs{0.0, 0.0};
  Complex rhs{0.0, 0.0};
  double abs_diff = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

OracleReport make_report(std::string name, Complex lhs, Complex rhs, double tolerance);

/// Brute-force quadrature of Integral_0^1 y^n ln(2 sin(pi[y+A])) dy with the
/// logarithm kept continuous in y; independent of the polylogarithmic closed
/// form in log_sine_moment.
Complex quad_log_sine_moment(int n, Complex A, double tol = 1e-12);

/// Brute-force quadrature of Integral_0^1 y^k cos(2 pi l [y+A]) dy
/// (extended precision internally).
Complex quad_cosine_moment(int k, int l, Complex A, double tol = 1e-13);

/// Quadrature of the Re s < 1 integral representation over a dyadically
/// graded mesh toward y = 0 (no endpoint expansion), as an independent check
/// of eval_integral_rep.
Complex quad_zeta_integral(Complex s, const ReducedParams& rp, double tol = 1e-11);

/// Central difference (evaluate(s0+h) - evaluate(s0-h)) / (2h).
Complex numeric_s_derivative(Complex s0, const ReducedParams& rp, double h);

/// Lattice sum at integer s = n >= 2 with (m,n) and (-m,-n) folded together,
/// which upgrades the ring decay from k^{1-n} to k^{-n} for odd n and makes
/// desk-scale tolerances reachable.  abs_err semantics as direct_sum.
EvalResult lattice_sum_integer(int n, const ReducedParams& rp, double tol,
                               long max_half_width = 20000);

/// Absolute tolerances used by the verification suite.
struct TolProfile {
  double closed_form = 1e-10;    // closed forms vs quadrature
  double trig_moment = 1e-12;    // cosine moments vs quadrature
  double series_form = 1e-12;    // tight series identities
  double fd_derivative = 1e-5;   // finite-difference derivative checks
  double fd_series = 1e-6;       // finite differences of series representations
  double lattice_extra = 1e-8;   // additive slack over direct_sum.abs_err
  double rel_identity = 1e-10;   // relative theta identities
  double s1_limit = 1e-4;        // s -> 1 extrapolated limit
  double em_shift = 1e-10;       // Hurwitz shift law
  double exact_zero = 1e-10;     // forced-path zeros at non-positive integers
  double representation = 1e-8;  // integral vs parts-chain agreement

  void validate() const;
  /// Replaces every field with `tol` (CLI --tol override).
  static TolProfile uniform(double tol);
};

int suite_global_reports();
int suite_reports_per_point();

/// Runs every spec'd invariant over the parameter grid; deterministic order,
/// no early abort.  Throws std::invalid_argument on an empty grid or a
/// non-positive tolerance.
std::vector<OracleReport> run_verification_suite(const std::vector<TorusParams>& grid,
                                                 const TolProfile& tols = {});

/// The built-in parameter grid used when none is supplied.
std::vector<TorusParams> default_grid();

}  // namespace torus_zeta::oracles
