#include "ostro/rational.hpp"

#include <cctype>
#include <cmath>

#include "ostro/error.hpp"

namespace ostro {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) {
    throw Error(ErrorKind::NotRational, "cannot parse '" + std::string(whole) + "'");
  }
  BigInt v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::NotRational, "cannot parse '" + std::string(whole) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return negative ? BigInt(-v) : v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return {parse_integer(t, text), BigInt(1)};
  BigInt den = parse_integer(t.substr(slash + 1), text);
  if (den == 0) throw Error(ErrorKind::NotRational, "zero denominator in '" + std::string(text) + "'");
  return {parse_integer(t.substr(0, slash), text), den};
}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NotRational, "non-finite double");
  int exponent = 0;
  double mantissa = std::frexp(x, &exponent);
  // 53-bit integer mantissa scaled by a power of two
  BigInt m = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  if (exponent >= 0) return {m << exponent, BigInt(1)};
  return {m, BigInt(1) << -exponent};
}

double Rational::to_double() const {
  // Scale into the 64-bit range before converting so huge terms do not overflow.
  const auto nb = num_ == 0 ? 0U : boost::multiprecision::msb(boost::multiprecision::abs(num_));
  const auto db = boost::multiprecision::msb(den_);
  const int shift_n = nb > 60 ? static_cast<int>(nb) - 60 : 0;
  const int shift_d = db > 60 ? static_cast<int>(db) - 60 : 0;
  const double n = static_cast<double>(BigInt(num_ >> shift_n));
  const double d = static_cast<double>(BigInt(den_ >> shift_d));
  return std::ldexp(n / d, shift_n - shift_d);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorKind::InvalidArgument, "rational division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const BigInt n = boost::multiprecision::sqrt(x.num());
  const BigInt d = boost::multiprecision::sqrt(x.den());
  if (n * n != x.num() || d * d != x.den()) return std::nullopt;
  return Rational(n, d);
}

}  // namespace ostro
