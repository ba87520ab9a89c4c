#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ostro {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n) {}        // NOLINT(google-explicit-constructor)
  Rational(BigInt num, BigInt den);

  /// Accepts "p", "p/q", optionally signed, surrounding whitespace ignored.
  static Rational parse(std::string_view text);
  /// Exact binary value of a finite double.
  static Rational from_double(double x);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  double to_double() const;
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r = a;
    r.num_ = -r.num_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize();

  BigInt num_ = 0;
  BigInt den_ = 1;
};

/// Square root when the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& x);

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace ostro
