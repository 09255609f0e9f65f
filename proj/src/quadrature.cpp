#include "torus_zeta/quadrature.hpp"

namespace torus_zeta {

namespace {

struct Workspace {
  const std::function<Complex(double)>* f = nullptr;
  long evaluations = 0;
  long budget = 0;
};

Complex sample(Workspace& ws, double x) {
  ++ws.evaluations;
  Complex v = (*ws.f)(x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw ConvergenceError("integrate: integrand returned a non-finite value");
  return v;
}

// Depth-first bisection; each accepted panel contributes err <= tol * width,
// so the total estimate stays below tol over a unit-length interval.
void refine(Workspace& ws, double lo, double hi, double tol_density, int depth,
            Complex& value, double& err) {
  Complex panel;
  double panel_err;
  detail::gk15_panel<double>(
      [&](double x) { return sample(ws, x); }, lo, hi, panel, panel_err);
  const double width = hi - lo;
  if (panel_err <= tol_density * width || depth >= 52) {
    value += panel;
    err += panel_err;
    return;
  }
  if (ws.evaluations + 30 > ws.budget)
    throw ConvergenceError("integrate: evaluation budget exhausted before reaching tolerance");
  const double mid = 0.5 * (lo + hi);
  refine(ws, lo, mid, tol_density, depth + 1, value, err);
  refine(ws, mid, hi, tol_density, depth + 1, value, err);
}

}  // namespace

QuadResult integrate(const std::function<Complex(double)>& f, double lo, double hi,
                     double tol, long max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");
  if (!(hi >= lo)) throw std::invalid_argument("integrate: bad interval");
  QuadResult result;
  if (hi == lo) return result;
  Workspace ws;
  ws.f = &f;
  ws.budget = max_evaluations;
  Complex value = 0.0;
  double err = 0.0;
  refine(ws, lo, hi, tol / (hi - lo), 0, value, err);
  result.value = value;
  result.abs_err = err;
  result.evaluations = ws.evaluations;
  if (err > tol * 1.0001 && err > 1e-300)
    throw ConvergenceError("integrate: error estimate above tolerance");
  return result;
}

QuadResult integrate_01(const std::function<Complex(double)>& f, double tol,
                        long max_evaluations) {
  return integrate(f, 0.0, 1.0, tol, max_evaluations);
}

}  // namespace torus_zeta
