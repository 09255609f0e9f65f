#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace torus_zeta {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr Complex kImagUnit{0.0, 1.0};

/// Truncation policy shared by every infinite series in the library: a sum
/// stops once the current term magnitude and a geometric tail bound both fall
/// below `tol`.  Exceeding `max_terms` is an error, never a silent cutoff.
struct SeriesTruncation {
  double tol = 1e-13;
  long max_terms = 200000;

  void validate() const {
    if (!(tol > 0.0)) throw std::invalid_argument("SeriesTruncation: tol must be positive");
    if (max_terms < 1) throw std::invalid_argument("SeriesTruncation: max_terms must be >= 1");
  }
};

/// A series or lattice sum ran past its term budget before meeting tolerance.
struct SeriesBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Quadrature could not reach the requested tolerance within its budget.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Nome and modular parameter shared by the theta-function stack.
/// tau is purely imaginary with Im tau > 0, and q = exp(-pi Im tau), so
/// 0 < q < 1 always holds for valid parameters.
struct ThetaContext {
  double q = 0.0;
  Complex tau{0.0, 0.0};
  SeriesTruncation trunc{};

  /// Builds the context for tau = i*ratio (ratio = b/c > 0).
  static ThetaContext from_ratio(double ratio, SeriesTruncation trunc = {}) {
    if (!(ratio > 0.0)) throw std::invalid_argument("ThetaContext: b/c must be positive");
    trunc.validate();
    ThetaContext ctx;
    ctx.tau = Complex(0.0, ratio);
    ctx.q = std::exp(-kPi * ratio);
    ctx.trunc = trunc;
    if (!(ctx.q > 0.0 && ctx.q < 1.0))
      throw std::invalid_argument("ThetaContext: q out of (0,1)");
    return ctx;
  }

  /// Builds the context from the nome q in (0,1); tau = i * (-ln q / pi).
  static ThetaContext from_nome(double q, SeriesTruncation trunc = {}) {
    if (!(q > 0.0 && q < 1.0))
      throw std::invalid_argument("ThetaContext: q must lie in (0,1)");
    return from_ratio(-std::log(q) / kPi, trunc);
  }

  /// Upper edge pi*Im(tau) of the horizontal strip where the Fourier-type
  /// series converge.
  double strip_height() const { return kPi * tau.imag(); }
};

}  // namespace torus_zeta
