#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <variant>

#include "ostro/error.hpp"
#include "ostro/jet.hpp"
#include "ostro/polynomial.hpp"

namespace ostro {

class Profile;

namespace profiles {

/// sum a_k z^k
struct Poly {
  Polynomial<double> p;

  template <class S>
  S eval(const S& z) const {
    return p(z);
  }
};

/// a1 z/(c0+z^2) + a2 z/(c0+z^2)^2 + a3 z/(c0+z^2)^3, c0 > 0
struct RationalTriple {
  double c0 = 1.0;
  std::array<double, 3> a{};

  template <class S>
  S eval(const S& z) const {
    const S q = S(c0) + z * z;
    const S r = z / q;
    return r * a[0] + r / q * a[1] + r / (q * q) * a[2];
  }
};

/// a1 tanh(kz) + a2 tanh(kz)^2 + a3 tanh(kz)^3
struct TanhTriple {
  double k = 1.0;
  std::array<double, 3> a{};

  template <class S>
  S eval(const S& z) const {
    using std::tanh;
    const S t = tanh(z * k);
    return t * (S(a[0]) + t * (S(a[1]) + t * a[2]));
  }
};

/// offset + cos_amp cos(freq z + phase) + sin_amp sin(freq z + phase)
struct Sinusoid {
  double offset = 0.0;
  double cos_amp = 0.0;
  double sin_amp = 0.0;
  double freq = 1.0;
  double phase = 0.0;

  template <class S>
  S eval(const S& z) const {
    using std::cos;
    using std::sin;
    const S arg = z * freq + phase;
    return S(offset) + cos(arg) * cos_amp + sin(arg) * sin_amp;
  }
};

/// alpha V'''' + V' V'' - beta V for a profile V.
struct ReductionForcing {
  std::shared_ptr<const Profile> profile;
  double alpha = 1.0;
  double beta = 1.0;
};

}  // namespace profiles

/// A closed-form function of one variable (the invariant coordinate zeta)
/// with derivatives of any order through truncated Taylor arithmetic, and
/// primitives normalized to vanish at zeta = 0.
class Profile {
 public:
  static constexpr int kMaxJetOrder = 16;
  /// Orders returned by derivatives().
  static constexpr int kDerivatives = 8;

  enum class Kind { polynomial, rational, tanh, sinusoid, reduction_forcing };

  using Variant = std::variant<profiles::Poly, profiles::RationalTriple, profiles::TanhTriple,
                               profiles::Sinusoid, profiles::ReductionForcing>;

  Profile() : v_(profiles::Poly{}) {}
  explicit Profile(Variant v) : v_(std::move(v)) {}

  static Profile zero() { return Profile(profiles::Poly{}); }
  static Profile polynomial(Polynomial<double> p) { return Profile(profiles::Poly{std::move(p)}); }
  static Profile rational(double c0, double a1, double a2, double a3);
  static Profile tanh(double k, double a1, double a2, double a3);
  static Profile sinusoid(double offset, double cos_amp, double sin_amp, double freq,
                          double phase);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const Variant& variant() const { return v_; }
  std::string describe() const;

  template <int N>
  Jet<double, N> jet(double z) const;

  double operator()(double z) const { return jet<0>(z)[0]; }
  double derivative(double z, int k) const;
  /// Values of f, f', ..., f^(kDerivatives) at z.
  std::array<double, kDerivatives + 1> derivatives(double z) const;

  /// Integral of f from 0 to z.
  double primitive(double z) const;
  /// Integral of s f(s) from 0 to z.
  double moment_primitive(double z) const;

 private:
  Variant v_;
};

/// h1 = alpha V'''' + V'V'' - beta V, as a profile; the reduction ODE
/// alpha V'''' + V'V'' - beta V = h1 then holds identically.
Profile forcing_from_profile(const Profile& V, double alpha, double beta);

std::string to_string(Profile::Kind kind);

template <int N>
Jet<double, N> Profile::jet(double z) const {
  return std::visit(
      [z](const auto& p) -> Jet<double, N> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, profiles::ReductionForcing>) {
          if constexpr (N + 4 <= kMaxJetOrder) {
            const auto v = p.profile->template jet<N + 4>(z);
            const auto d1 = differentiate(v);
            const auto d2 = differentiate(d1);
            const auto d4 = differentiate(differentiate(d2));
            return d4 * p.alpha + truncate<N>(d1) * truncate<N>(d2) - truncate<N>(v) * p.beta;
          } else {
            throw Error(ErrorKind::InvalidArgument, "profile nesting exceeds jet order limit");
          }
        } else {
          return p.eval(Jet<double, N>::variable(z));
        }
      },
      v_);
}

}  // namespace ostro
