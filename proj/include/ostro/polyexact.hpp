#pragma once

#include <set>

#include "ostro/cubic.hpp"
#include "ostro/polynomial.hpp"
#include "ostro/rational.hpp"

namespace ostro {

using RationalPoly = Polynomial<Rational>;

enum class PolyOp { add, sub, mul };

template <class Scalar>
Polynomial<Scalar> poly_arith(const Polynomial<Scalar>& p, const Polynomial<Scalar>& q,
                              PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  return {};
}

template <class Scalar>
Polynomial<Scalar> poly_diff(const Polynomial<Scalar>& p, int k) {
  return derivative(p, k);
}

/// alpha V'''' + V'V'' - beta V - h1; zero iff V solves the reduction ODE with forcing h1.
template <class Scalar>
Polynomial<Scalar> reduction_residual_poly(const Polynomial<Scalar>& V,
                                           const Polynomial<Scalar>& h1, const Scalar& alpha,
                                           const Scalar& beta) {
  const auto d1 = derivative(V, 1);
  const auto d2 = derivative(V, 2);
  return alpha * derivative(V, 4) + d1 * d2 - beta * V - h1;
}

/// Brute-force certificate for a cubic family instance.
bool family_brute_check(const CubicCoeffs<Rational>& coeffs, const Rational& alpha,
                        const Rational& beta);

/// Degrees n in 1..n_max at which two of the exponents n-4, n, 2n-3 coincide,
/// counting a term only when the degree-n monomial leaves it nonzero.
std::set<int> balance_exponents(int n_max);

}  // namespace ostro
