#pragma once

#include <string>

namespace ostro {

/// A scalar function of time from the closed catalog
///
///   f(t) = c0 + c1*t + amplitude*sin(omega*t + phase).
///
/// Used for the frame speed c(t), the gauge term h0(t), and the
/// time-dependent coefficients of quadratic topographies. The family is
/// closed under affine maps, which the travelling-wave reduction relies on.
/// The primitive is normalized so that primitive(0) = 0.
class TimeProfile {
 public:
  enum class Kind { zero, constant, linear, sinusoid };

  TimeProfile() = default;

  static TimeProfile zero() { return {}; }
  static TimeProfile constant(double c0) { return {c0, 0.0, 0.0, 0.0, 0.0}; }
  static TimeProfile linear(double c0, double c1) { return {c0, c1, 0.0, 0.0, 0.0}; }
  static TimeProfile sinusoid(double c0, double amplitude, double omega, double phase) {
    return {c0, 0.0, amplitude, omega, phase};
  }
  static TimeProfile general(double c0, double c1, double amplitude, double omega,
                             double phase) {
    return {c0, c1, amplitude, omega, phase};
  }

  Kind kind() const;
  std::string describe() const;

  double operator()(double t) const { return derivative(t, 0); }
  /// k-th derivative, any k >= 0.
  double derivative(double t, int k) const;
  /// Integral from 0 to t.
  double primitive(double t) const;

  /// scale * f(t) + offset.
  TimeProfile affine(double scale, double offset) const;

  double c0() const { return c0_; }
  double c1() const { return c1_; }
  double amplitude() const { return amplitude_; }
  double omega() const { return omega_; }
  double phase() const { return phase_; }

  bool is_zero() const { return kind() == Kind::zero; }

  friend bool operator==(const TimeProfile&, const TimeProfile&) = default;

 private:
  TimeProfile(double c0, double c1, double amplitude, double omega, double phase)
      : c0_(c0), c1_(c1), amplitude_(amplitude), omega_(omega), phase_(phase) {}

  double c0_ = 0.0;
  double c1_ = 0.0;
  double amplitude_ = 0.0;
  double omega_ = 0.0;
  double phase_ = 0.0;
};

using SpeedProfile = TimeProfile;

/// Moving coordinate x - C(t), C the primitive of the speed with C(0) = 0.
inline double chi(const SpeedProfile& speed, double x, double t) {
  return x - speed.primitive(t);
}

std::string to_string(TimeProfile::Kind kind);

}  // namespace ostro
