#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ostro {

/// Dense univariate polynomial, coefficients indexed by degree.
///
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero. Scalar is double for evaluation or Rational for exact identities.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Scalar& coeff, std::size_t degree) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const std::vector<Scalar>& coefficients() const { return c_; }

  Scalar coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }

  /// Horner evaluation; X may differ from Scalar (e.g. a Jet).
  template <class X>
  X operator()(const X& x) const {
    X r = X(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + X(*it);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& p) {
    std::vector<Scalar> r = p.c_;
    for (auto& x : r) x = s * x;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Antiderivative vanishing at 0.
  Polynomial integral() const {
    if (is_zero()) return {};
    std::vector<Scalar> r(c_.size() + 1, Scalar(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r[k + 1] = c_[k] / Scalar(static_cast<int>(k + 1));
    return Polynomial(std::move(r));
  }

  template <class To, class Convert>
  Polynomial<To> map(Convert convert) const {
    std::vector<To> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(convert(x));
    return Polynomial<To>(std::move(r));
  }

  std::string to_string(const std::string& var = "z") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k] == Scalar(0)) continue;
      if (!first) os << " + ";
      os << "(" << c_[k] << ")";
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

/// k-th derivative.
template <class Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& p, int k = 1) {
  std::vector<Scalar> c = p.coefficients();
  for (int step = 0; step < k && !c.empty(); ++step) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = Scalar(static_cast<int>(i)) * c[i];
    c.pop_back();
  }
  return Polynomial<Scalar>(std::move(c));
}

}  // namespace ostro
