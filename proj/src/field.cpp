#include "ostro/field.hpp"

#include <cmath>
#include <string>

namespace ostro {

Grid1D::Grid1D(double a, double b, int n, bool periodic)
    : a_(a), b_(b), n_(n), periodic_(periodic), dx_(0.0) {
  if (!(b > a)) throw Error(ErrorKind::InvalidArgument, "grid needs b > a");
  if (n < kMinPoints) {
    throw Error(ErrorKind::GridTooSmall, "grid needs at least 8 points, got " + std::to_string(n));
  }
  dx_ = periodic ? (b - a) / n : (b - a) / (n - 1);
}

Eigen::VectorXd Grid1D::points() const {
  Eigen::VectorXd p(n_);
  for (int i = 0; i < n_; ++i) p[i] = x(i);
  return p;
}

SampledField::SampledField(Grid1D g, double time, Eigen::VectorXd v, int trimmed)
    : grid(g), t(time), values(std::move(v)), margin(trimmed) {
  if (values.size() != grid.n()) {
    throw Error(ErrorKind::ShapeMismatch, "sample count does not match grid");
  }
  if (margin < 0 || 2 * margin >= grid.n()) {
    throw Error(ErrorKind::GridTooSmall, "trimmed margin leaves no interior");
  }
  if (!values.allFinite()) throw Error(ErrorKind::NonFiniteState, "non-finite sample");
}

double SampledField::max_abs() const {
  return values.segment(begin(), end() - begin()).cwiseAbs().maxCoeff();
}

SampledField sample(const ClosedFormField& f, const Grid1D& grid, double t) {
  return sample_dx(f, grid, t, 0);
}

SampledField sample_dx(const ClosedFormField& f, const Grid1D& grid, double t, int k) {
  if (k < 0 || k > FieldPartials::kMaxX) {
    throw Error(ErrorKind::InvalidArgument, "derivative order out of range");
  }
  Eigen::VectorXd v(grid.n());
  for (int i = 0; i < grid.n(); ++i) v[i] = f.partials(grid.x(i), t).dx[static_cast<std::size_t>(k)];
  return {grid, t, std::move(v)};
}

}  // namespace ostro
