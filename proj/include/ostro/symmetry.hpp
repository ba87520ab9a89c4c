#pragma once

#include <variant>

#include "ostro/field.hpp"
#include "ostro/time_profile.hpp"

namespace ostro {

namespace generators {

/// Accelerated Galilean boost: t -> t + eps carried along the frame C(t).
struct X1 {
  SpeedProfile speed;
  TimeProfile h0;
};

/// Shift along E(t) = exp(-(2/beta) int h2 dt).
struct X2 {
  TimeProfile h2;
  double beta = 1.0;
};

}  // namespace generators

struct PointImage {
  double t;
  double x;
  double u;
};

/// One of the two admitted point-symmetry generators and its finite flow on (t, x, u).
class SymmetryGenerator {
 public:
  enum class Kind { x1, x2 };
  using Variant = std::variant<generators::X1, generators::X2>;

  static SymmetryGenerator x1(SpeedProfile speed, TimeProfile h0 = TimeProfile::zero()) {
    return SymmetryGenerator(generators::X1{speed, h0});
  }
  static SymmetryGenerator x2(TimeProfile h2, double beta);

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  const Variant& variant() const { return v_; }

  /// Image of the point (t, x, u) after group parameter eps.
  PointImage map(double eps, double t, double x, double u) const;

  /// The transformed solution u~ whose graph is the image of the graph of u.
  ClosedFormField apply(double eps, const ClosedFormField& u) const;

  /// E(t) and its first two derivatives for X2.
  static std::array<double, 3> shift_factor(const generators::X2& g, double t);

 private:
  explicit SymmetryGenerator(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

inline ClosedFormField apply_symmetry(const SymmetryGenerator& gen, double eps,
                                      const ClosedFormField& u) {
  return gen.apply(eps, u);
}

}  // namespace ostro
