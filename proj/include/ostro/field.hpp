#pragma once

#include <Eigen/Dense>

#include <array>
#include <functional>
#include <utility>

#include "ostro/error.hpp"

namespace ostro {

/// Value and partial derivatives of a scalar field at one point:
/// dx[k] = d^k f/dx^k for k = 0..6, plus f_t and f_tx.
struct FieldPartials {
  static constexpr int kMaxX = 6;
  std::array<double, kMaxX + 1> dx{};
  double dt = 0.0;
  double dtx = 0.0;

  double value() const { return dx[0]; }
};

/// A closed-form field f(x, t) with analytic partials.
class ClosedFormField {
 public:
  using Evaluator = std::function<FieldPartials(double x, double t)>;

  ClosedFormField() : eval_([](double, double) { return FieldPartials{}; }) {}
  explicit ClosedFormField(Evaluator eval) : eval_(std::move(eval)) {}

  static ClosedFormField zero() { return {}; }

  FieldPartials partials(double x, double t) const { return eval_(x, t); }
  double operator()(double x, double t) const { return eval_(x, t).dx[0]; }

 private:
  Evaluator eval_;
};

/// Uniform 1-D grid. Periodic grids exclude the right endpoint.
class Grid1D {
 public:
  static constexpr int kMinPoints = 8;

  Grid1D(double a, double b, int n, bool periodic);

  double a() const { return a_; }
  double b() const { return b_; }
  int n() const { return n_; }
  bool periodic() const { return periodic_; }
  double dx() const { return dx_; }
  double length() const { return b_ - a_; }
  double x(int i) const { return a_ + dx_ * i; }
  Eigen::VectorXd points() const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;

 private:
  double a_;
  double b_;
  int n_;
  bool periodic_;
  double dx_;
};

/// Samples of a field on a grid at time t. The first and last `margin`
/// entries are not meaningful (left by interior-only stencils) and hold 0.
struct SampledField {
  Grid1D grid;
  double t = 0.0;
  Eigen::VectorXd values;
  int margin = 0;

  SampledField(Grid1D g, double time, Eigen::VectorXd v, int trimmed = 0);

  int begin() const { return margin; }
  int end() const { return grid.n() - margin; }
  /// Max |value| over the untrimmed range.
  double max_abs() const;
};

/// Sample the value of a closed-form field.
SampledField sample(const ClosedFormField& f, const Grid1D& grid, double t);
/// Sample dx^k f for k <= FieldPartials::kMaxX.
SampledField sample_dx(const ClosedFormField& f, const Grid1D& grid, double t, int k);

}  // namespace ostro
