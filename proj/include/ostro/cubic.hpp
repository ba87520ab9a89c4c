#pragma once

#include <cmath>
#include <string>

#include "ostro/error.hpp"
#include "ostro/polynomial.hpp"
#include "ostro/rational.hpp"

namespace ostro {

enum class CubicFamily { fam1, fam2, fam3 };
enum class Branch { plus, minus };

std::string to_string(CubicFamily family);

/// Profile V = c3 z^3 + c2 z^2 + c1 z + c0 with forcing
/// h1 = a3 z^3 + a2 z^2 + a1 z + a0 solving alpha V'''' + V'V'' - beta V = h1.
/// alpha drops out because V'''' = 0 for cubics.
template <class Scalar>
struct CubicCoeffs {
  Scalar c3{}, c2{}, c1{}, c0{};
  Scalar a3{}, a2{}, a1{}, a0{};
  CubicFamily family = CubicFamily::fam1;

  Polynomial<Scalar> profile() const { return Polynomial<Scalar>({c0, c1, c2, c3}); }
  Polynomial<Scalar> forcing() const { return Polynomial<Scalar>({a0, a1, a2, a3}); }

  template <class To, class Convert>
  CubicCoeffs<To> map(Convert convert) const {
    return {convert(c3), convert(c2), convert(c1), convert(c0),
            convert(a3), convert(a2), convert(a1), convert(a0), family};
  }
};

namespace detail {

inline double checked_sqrt(double x) { return std::sqrt(x); }

inline Rational checked_sqrt(const Rational& x) {
  auto r = exact_sqrt(x);
  if (!r) {
    throw Error(ErrorKind::NotRational,
                "discriminant " + x.to_string() + " is not a rational square");
  }
  return *r;
}

template <class Scalar>
void require_nonzero(const Scalar& d, const char* what) {
  if (d == Scalar(0)) throw Error(ErrorKind::DegenerateDenominator, what);
}

}  // namespace detail

/// Three-term balance with free forcing (a3, a2, a1, a0); branch picks the root for c3.
template <class Scalar>
CubicCoeffs<Scalar> cubic_family_1(const Scalar& a3, const Scalar& a2, const Scalar& a1,
                                   const Scalar& a0, const Scalar& beta, Branch branch) {
  const Scalar disc = Scalar(72) * a3 + beta * beta;
  if (disc < Scalar(0)) {
    throw Error(ErrorKind::NegativeDiscriminant, "72 a3 + beta^2 < 0");
  }
  const Scalar root = detail::checked_sqrt(disc);
  CubicCoeffs<Scalar> k;
  k.family = CubicFamily::fam1;
  k.a3 = a3;
  k.a2 = a2;
  k.a1 = a1;
  k.a0 = a0;
  k.c3 = (branch == Branch::plus ? beta + root : beta - root) / Scalar(36);
  const Scalar d2 = Scalar(18) * k.c3 - beta;
  const Scalar d1 = Scalar(6) * k.c3 - beta;
  detail::require_nonzero(d2, "18 c3 - beta vanishes (family-3 boundary)");
  detail::require_nonzero(d1, "6 c3 - beta vanishes (family-2 boundary)");
  detail::require_nonzero(beta, "beta vanishes");
  k.c2 = a2 / d2;
  k.c1 = (a1 - Scalar(4) * k.c2 * k.c2) / d1;
  k.c0 = (Scalar(2) * k.c1 * k.c2 - a0) / beta;
  return k;
}

/// c3 = beta/6: the forcing is tied to a2, one free constant c0.
template <class Scalar>
CubicCoeffs<Scalar> cubic_family_2(const Scalar& a2, const Scalar& a0, const Scalar& c0,
                                   const Scalar& beta) {
  if (a2 == Scalar(0)) throw Error(ErrorKind::ZeroCoefficient, "family 2 needs a2 != 0");
  detail::require_nonzero(beta, "beta vanishes");
  CubicCoeffs<Scalar> k;
  k.family = CubicFamily::fam2;
  k.c3 = beta / Scalar(6);
  k.c2 = a2 / (Scalar(2) * beta);
  k.c1 = (a0 + c0 * beta) * beta / a2;
  k.c0 = c0;
  k.a3 = beta * beta / Scalar(3);
  k.a2 = a2;
  k.a1 = a2 * a2 / (beta * beta);
  k.a0 = a0;
  return k;
}

/// c3 = beta/18: no cubic or quadratic forcing, one free constant c2.
template <class Scalar>
CubicCoeffs<Scalar> cubic_family_3(const Scalar& c2, const Scalar& a1, const Scalar& a0,
                                   const Scalar& beta) {
  detail::require_nonzero(beta, "beta vanishes");
  CubicCoeffs<Scalar> k;
  k.family = CubicFamily::fam3;
  k.c3 = beta / Scalar(18);
  k.c2 = c2;
  k.c1 = (Scalar(12) * c2 * c2 - Scalar(3) * a1) / (Scalar(2) * beta);
  k.c0 = (Scalar(12) * c2 * c2 * c2 - Scalar(3) * a1 * c2 - beta * a0) / (beta * beta);
  k.a3 = Scalar(0);
  k.a2 = Scalar(0);
  k.a1 = a1;
  k.a0 = a0;
  return k;
}

inline CubicCoeffs<double> to_double(const CubicCoeffs<Rational>& k) {
  return k.map<double>([](const Rational& r) { return r.to_double(); });
}

}  // namespace ostro
