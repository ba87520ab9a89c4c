#include "ostro/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ostro {

std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size());
  if (m < 0 || n <= m) throw Error(ErrorKind::InvalidArgument, "too few nodes for derivative order");
  // c[j][k]: weight of node j for derivative k
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(m + 1), 0.0));
  double c1 = 1.0;
  double c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      auto& ci = c[static_cast<std::size_t>(i)];
      auto& cj = c[static_cast<std::size_t>(j)];
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          ci[k] = c1 * (k * c[static_cast<std::size_t>(i - 1)][k - 1] - c5 * c[static_cast<std::size_t>(i - 1)][k]) / c2;
        }
        ci[0] = -c1 * c5 * c[static_cast<std::size_t>(i - 1)][0] / c2;
      }
      for (int k = mn; k >= 1; --k) cj[k] = (c4 * cj[k] - k * cj[k - 1]) / c3;
      cj[0] = c4 * cj[0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)];
  return w;
}

int stencil_half_width(int order, int accuracy) {
  if (order < 1 || order > 5) throw Error(ErrorKind::InvalidArgument, "stencil order must be 1..5");
  if (accuracy != 2 && accuracy != 4) throw Error(ErrorKind::InvalidArgument, "stencil accuracy must be 2 or 4");
  return (order - 1) / 2 + accuracy / 2;
}

std::vector<double> central_weights(int order, int accuracy) {
  const int r = stencil_half_width(order, accuracy);
  std::vector<double> nodes;
  for (int j = -r; j <= r; ++j) nodes.push_back(j);
  return fornberg_weights(0.0, nodes, order);
}

SampledField fd_derivative(const SampledField& f, const StencilSpec& spec) {
  const int r = stencil_half_width(spec.order, spec.accuracy);
  const auto w = central_weights(spec.order, spec.accuracy);
  const int n = f.grid.n();
  const double scale = std::pow(f.grid.dx(), -spec.order);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  if (spec.boundary == Boundary::periodic_wrap) {
    if (!f.grid.periodic()) throw Error(ErrorKind::NotPeriodic, "periodic stencil on a bounded grid");
    if (2 * r + 1 > n) {
      throw Error(ErrorKind::GridTooSmall, "stencil width " + std::to_string(2 * r + 1) +
                                               " exceeds " + std::to_string(n) + " points");
    }
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = -r; j <= r; ++j) s += w[static_cast<std::size_t>(j + r)] * f.values[((i + j) % n + n) % n];
      out[i] = s * scale;
    }
    return {f.grid, f.t, std::move(out), 0};
  }
  const int margin = f.margin + r;
  if (2 * margin >= n) {
    throw Error(ErrorKind::GridTooSmall, "stencil width " + std::to_string(2 * r + 1) +
                                             " leaves no interior on " + std::to_string(n) + " points");
  }
  for (int i = margin; i < n - margin; ++i) {
    double s = 0.0;
    for (int j = -r; j <= r; ++j) s += w[static_cast<std::size_t>(j + r)] * f.values[i + j];
    out[i] = s * scale;
  }
  return {f.grid, f.t, std::move(out), margin};
}

Spectral::Spectral(int n, double length) : n_(n), k_(n) {
  if (n % 2 != 0) throw Error(ErrorKind::InvalidArgument, "spectral grid needs an even point count");
  const double base = 2.0 * std::numbers::pi / length;
  for (int j = 0; j < n; ++j) k_[j] = base * (j <= n / 2 ? j : j - n);
}

Eigen::VectorXcd Spectral::forward(const Eigen::VectorXd& f) const {
  Eigen::VectorXcd out(n_);
  fft_.fwd(out, f);
  return out;
}

Eigen::VectorXd Spectral::inverse(const Eigen::VectorXcd& fh) const {
  Eigen::VectorXcd out(n_);
  fft_.inv(out, fh);
  return out.real();
}

Eigen::VectorXcd Spectral::derivative_symbol(int order) const {
  Eigen::VectorXcd s(n_);
  const std::complex<double> i(0.0, 1.0);
  for (int j = 0; j < n_; ++j) s[j] = std::pow(i * k_[j], order);
  if (order % 2 == 1) s[n_ / 2] = 0.0;
  return s;
}

Eigen::VectorXd Spectral::derivative(const Eigen::VectorXd& f, int order) const {
  if (order == 0) return f;
  return inverse(forward(f).cwiseProduct(derivative_symbol(order)));
}

Eigen::VectorXd Spectral::antiderivative(const Eigen::VectorXd& f) const {
  Eigen::VectorXcd fh = forward(f);
  const std::complex<double> i(0.0, 1.0);
  fh[0] = 0.0;
  fh[n_ / 2] = 0.0;
  for (int j = 1; j < n_; ++j) {
    if (j != n_ / 2) fh[j] /= i * k_[j];
  }
  return inverse(fh);
}

namespace {

void require_periodic(const SampledField& f) {
  if (!f.grid.periodic()) throw Error(ErrorKind::NotPeriodic, "spectral operation on a bounded grid");
  if (f.grid.n() % 2 != 0) throw Error(ErrorKind::NotPeriodic, "spectral operation needs an even point count");
}

}  // namespace

SampledField dft_derivative(const SampledField& f, int k) {
  require_periodic(f);
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative derivative order");
  const Spectral sp(f.grid.n(), f.grid.length());
  return {f.grid, f.t, sp.derivative(f.values, k)};
}

SampledField zero_mean_antiderivative(const SampledField& f) {
  require_periodic(f);
  const double mean = f.values.mean();
  const double scale = f.values.cwiseAbs().maxCoeff();
  if (std::abs(mean) > 1e-8 * scale) {
    throw Error(ErrorKind::NonZeroMean, "field mean " + std::to_string(mean) + " is not zero");
  }
  const Spectral sp(f.grid.n(), f.grid.length());
  return {f.grid, f.t, sp.antiderivative(f.values)};
}

double quadrature(const SampledField& f) {
  const double dx = f.grid.dx();
  if (f.grid.periodic()) return dx * f.values.sum();
  const int n = f.grid.n();
  return dx * (f.values.sum() - 0.5 * (f.values[0] + f.values[n - 1]));
}

double simpson(const SampledField& f) {
  if (f.grid.periodic()) return quadrature(f);
  const int n = f.grid.n();
  if (n % 2 == 0) throw Error(ErrorKind::InvalidArgument, "Simpson rule needs an odd point count");
  double s = f.values[0] + f.values[n - 1];
  for (int i = 1; i < n - 1; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f.values[i];
  return s * f.grid.dx() / 3.0;
}

double convergence_order(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 3) {
    throw Error(ErrorKind::InsufficientSamples, "need at least 3 samples, got " + std::to_string(samples.size()));
  }
  const auto m = static_cast<double>(samples.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [dx, err] = samples[i];
    if (i > 0 && !(dx < samples[i - 1].first)) {
      throw Error(ErrorKind::InvalidArgument, "dx must be strictly decreasing");
    }
    if (!(dx > 0.0) || !(err > 0.0)) throw Error(ErrorKind::InvalidArgument, "dx and errors must be positive");
    const double x = std::log(dx);
    const double y = std::log(err);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace ostro
