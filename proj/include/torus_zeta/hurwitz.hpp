#pragma once

#include "torus_zeta/types.hpp"

namespace torus_zeta {

/// Radius around s = 1 inside which evaluation is refused; the residue there
/// must be handled analytically by the caller.
inline constexpr double kHurwitzPoleRadius = 1e-6;

/// Hurwitz zeta, the meromorphic continuation of sum_{n>=0} (n+y)^{-s},
/// for complex s != 1 and real y in (0, 2].  Euler-Maclaurin summation with
/// an explicit remainder bound kept below `tol`.
Complex hurwitz_zeta(Complex s, double y, double tol = 1e-13);

}  // namespace torus_zeta
