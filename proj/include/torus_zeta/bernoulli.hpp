#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "torus_zeta/types.hpp"

namespace torus_zeta {

using Rational = boost::multiprecision::cpp_rational;

/// k-th Bernoulli number as an exact rational, in the convention fixed by
/// sum_{j=0}^{n} C(n+1,j) B_j = 0 for n >= 1 with B_0 = 1 (hence B_1 = -1/2).
/// Values are cached; thread-safe.
const Rational& bernoulli_rational(int k);

/// B_k rounded to double.
double bernoulli_number(int k);

/// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^{n-k}.
Complex bernoulli_poly(int n, Complex x);

/// Exact binomial coefficient as double (n small enough that this is exact
/// for every use in this library).
double binomial(int n, int k);

}  // namespace torus_zeta
