#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace ostro {

/// Truncated Taylor series f(z0 + s) = sum_k a_k s^k, k = 0..N.
///
/// Coefficient k holds f^(k)(z0)/k!. Arithmetic and the elementary functions
/// below propagate the series exactly up to order N, so a closed form written
/// once as a template over the scalar type yields all derivatives to order N.
/// The scalar T only needs +, -, *, / and the elementary functions found by ADL.
template <class T, int N>
class Jet {
  static_assert(N >= 0, "jet order must be non-negative");

 public:
  static constexpr int order = N;
  using Coefficients = std::array<T, N + 1>;

  Jet() { a_.fill(T(0)); }
  Jet(const T& constant) {  // NOLINT(google-explicit-constructor)
    a_.fill(T(0));
    a_[0] = constant;
  }

  /// The identity map s -> z0 + s expanded at z0.
  static Jet variable(const T& z0) {
    Jet j(z0);
    if constexpr (N >= 1) j.a_[1] = T(1);
    return j;
  }

  const T& operator[](int k) const { return a_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return a_[static_cast<std::size_t>(k)]; }

  const T& value() const { return a_[0]; }

  /// k-th derivative at the expansion point.
  T derivative(int k) const {
    T f = T(1);
    for (int i = 2; i <= k; ++i) f = f * T(i);
    return a_[static_cast<std::size_t>(k)] * f;
  }

  Jet& operator+=(const Jet& o) {
    for (int k = 0; k <= N; ++k) (*this)[k] = (*this)[k] + o[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (int k = 0; k <= N; ++k) (*this)[k] = (*this)[k] - o[k];
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator-(const Jet& x) {
    Jet r;
    for (int k = 0; k <= N; ++k) r[k] = -x[k];
    return r;
  }
  friend Jet operator+(Jet x, const Jet& y) { return x += y; }
  friend Jet operator-(Jet x, const Jet& y) { return x -= y; }

  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      T s = T(0);
      for (int i = 0; i <= k; ++i) s = s + x[i] * y[k - i];
      r[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet r;
    for (int k = 0; k <= N; ++k) {
      T s = x[k];
      for (int i = 1; i <= k; ++i) s = s - y[i] * r[k - i];
      r[k] = s / y[0];
    }
    return r;
  }

  friend Jet operator+(const Jet& x, const T& c) { return x + Jet(c); }
  friend Jet operator+(const T& c, const Jet& x) { return Jet(c) + x; }
  friend Jet operator-(const Jet& x, const T& c) { return x - Jet(c); }
  friend Jet operator-(const T& c, const Jet& x) { return Jet(c) - x; }
  friend Jet operator*(const Jet& x, const T& c) {
    Jet r;
    for (int k = 0; k <= N; ++k) r[k] = x[k] * c;
    return r;
  }
  friend Jet operator*(const T& c, const Jet& x) { return x * c; }
  friend Jet operator/(const Jet& x, const T& c) {
    Jet r;
    for (int k = 0; k <= N; ++k) r[k] = x[k] / c;
    return r;
  }
  friend Jet operator/(const T& c, const Jet& x) { return Jet(c) / x; }

  friend Jet exp(const Jet& x) {
    using std::exp;
    Jet r;
    r[0] = exp(x[0]);
    for (int k = 1; k <= N; ++k) {
      T s = T(0);
      for (int j = 1; j <= k; ++j) s = s + T(j) * x[j] * r[k - j];
      r[k] = s / T(k);
    }
    return r;
  }

  friend Jet log(const Jet& x) {
    using std::log;
    Jet r;
    r[0] = log(x[0]);
    for (int k = 1; k <= N; ++k) {
      T s = T(k) * x[k];
      for (int j = 1; j < k; ++j) s = s - T(j) * r[j] * x[k - j];
      r[k] = s / (T(k) * x[0]);
    }
    return r;
  }

  friend Jet sqrt(const Jet& x) {
    using std::sqrt;
    Jet r;
    r[0] = sqrt(x[0]);
    for (int k = 1; k <= N; ++k) {
      T s = x[k];
      for (int i = 1; i < k; ++i) s = s - r[i] * r[k - i];
      r[k] = s / (T(2) * r[0]);
    }
    return r;
  }

  /// sin and cos share one recurrence.
  friend void sincos(const Jet& x, Jet& s, Jet& c) {
    using std::cos;
    using std::sin;
    s[0] = sin(x[0]);
    c[0] = cos(x[0]);
    for (int k = 1; k <= N; ++k) {
      T ss = T(0);
      T cc = T(0);
      for (int j = 1; j <= k; ++j) {
        ss = ss + T(j) * x[j] * c[k - j];
        cc = cc - T(j) * x[j] * s[k - j];
      }
      s[k] = ss / T(k);
      c[k] = cc / T(k);
    }
  }
  friend Jet sin(const Jet& x) {
    Jet s, c;
    sincos(x, s, c);
    return s;
  }
  friend Jet cos(const Jet& x) {
    Jet s, c;
    sincos(x, s, c);
    return c;
  }

  // tanh' = 1 - tanh^2
  friend Jet tanh(const Jet& x) {
    using std::tanh;
    Jet r;
    Jet q;  // 1 - r^2
    r[0] = tanh(x[0]);
    q[0] = T(1) - r[0] * r[0];
    for (int k = 1; k <= N; ++k) {
      T s = T(0);
      for (int j = 1; j <= k; ++j) s = s + T(j) * x[j] * q[k - j];
      r[k] = s / T(k);
      T p = T(0);
      for (int i = 0; i <= k; ++i) p = p + r[i] * r[k - i];
      q[k] = -p;
    }
    return r;
  }

  friend Jet pow(const Jet& x, int n) {
    Jet r(T(1));
    Jet b = n < 0 ? Jet(T(1)) / x : x;
    for (unsigned m = static_cast<unsigned>(n < 0 ? -n : n); m != 0; m >>= 1) {
      if (m & 1U) r = r * b;
      if (m > 1) b = b * b;
    }
    return r;
  }

 private:
  Coefficients a_;
};

/// Series of f' from the series of f; loses the top order.
template <class T, int N>
Jet<T, N - 1> differentiate(const Jet<T, N>& f) {
  Jet<T, N - 1> r;
  for (int k = 0; k < N; ++k) r[k] = T(k + 1) * f[k + 1];
  return r;
}

/// Drops orders above M.
template <int M, class T, int N>
Jet<T, M> truncate(const Jet<T, N>& f) {
  static_assert(M <= N);
  Jet<T, M> r;
  for (int k = 0; k <= M; ++k) r[k] = f[k];
  return r;
}

}  // namespace ostro
