#pragma once

#include <string>
#include <variant>

#include "ostro/profile.hpp"
#include "ostro/time_profile.hpp"

namespace ostro {

namespace topographies {

/// h = h1(chi) - beta c(t) chi + h0(t), chi = x - C(t).
struct Galilean {
  Profile h1;
  SpeedProfile speed;
  TimeProfile h0;
  double beta = 1.0;
};

/// h = h2(t) x^2 + h1(t) x + h0(t).
struct QuadraticInX {
  TimeProfile h2;
  TimeProfile h1;
  TimeProfile h0;
};

/// h = h2 x^2 + h1(t) x + h0(t) with constant h2.
struct QuadraticConstant {
  double h2 = 0.0;
  TimeProfile h1;
  TimeProfile h0;
};

}  // namespace topographies

struct TopoValues {
  double h;
  double h_x;
  double h_t;
  /// x-antiderivative with H(0, t) = 0.
  double H;
};

/// Forcing h(x,t) restricted to the structural families that admit the
/// point symmetries. Construction rejects h with h_x identically zero
/// unless the unforced case is requested explicitly.
class Topography {
 public:
  enum class Kind { galilean, quadratic, quadratic_constant };
  using Variant = std::variant<topographies::Galilean, topographies::QuadraticInX,
                               topographies::QuadraticConstant>;

  static Topography galilean(Profile h1, SpeedProfile speed, TimeProfile h0, double beta,
                             bool allow_unforced = false);
  static Topography quadratic(TimeProfile h2, TimeProfile h1, TimeProfile h0,
                              bool allow_unforced = false);
  static Topography quadratic_constant(double h2, TimeProfile h1, TimeProfile h0,
                                       bool allow_unforced = false);
  /// h identically zero.
  static Topography none();

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const Variant& variant() const { return v_; }
  bool unforced() const { return unforced_; }
  std::string describe() const;

  TopoValues eval(double x, double t) const;
  /// True when h does not depend on t.
  bool is_static() const;
  double operator()(double x, double t) const { return eval(x, t).h; }

  /// The constant-h2 variant viewed as a general quadratic; throws
  /// ShapeMismatch for the Galilean variant.
  topographies::QuadraticInX as_quadratic() const;

 private:
  explicit Topography(Variant v) : v_(std::move(v)) {}
  void check_forced(bool allow_unforced);

  Variant v_;
  bool unforced_ = false;
};

TopoValues topo_eval(const Topography& topo, double x, double t);

std::string to_string(Topography::Kind kind);

}  // namespace ostro
