#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <complex>
#include <utility>
#include <vector>

#include "ostro/field.hpp"

namespace ostro {

enum class Boundary { periodic_wrap, interior_only };

struct StencilSpec {
  int order = 1;     ///< derivative order, 1..5
  int accuracy = 4;  ///< 2 or 4
  Boundary boundary = Boundary::interior_only;
};

/// Finite-difference weights for the m-th derivative at x0 over arbitrary nodes (Fornberg).
std::vector<double> fornberg_weights(double x0, const std::vector<double>& nodes, int m);

/// Half-width r of the centered stencil: floor((order - 1)/2) + accuracy/2.
int stencil_half_width(int order, int accuracy);

/// Centered weights at unit spacing, offsets -r..r.
std::vector<double> central_weights(int order, int accuracy);

/// Centered difference; interior-only output grows the trimmed margin by r.
SampledField fd_derivative(const SampledField& f, const StencilSpec& spec);

/// Fourier derivative of order k on an even periodic grid; Nyquist mode dropped for odd k.
SampledField dft_derivative(const SampledField& f, int k);

/// Periodic antiderivative with zero mean.
SampledField zero_mean_antiderivative(const SampledField& f);

/// Trapezoid rule; the rectangle sum on periodic grids.
double quadrature(const SampledField& f);
/// Composite Simpson on an odd point count; the rectangle sum on periodic grids.
double simpson(const SampledField& f);

/// Least-squares slope of log(err) against log(dx).
double convergence_order(const std::vector<std::pair<double, double>>& samples);

/// Real FFT helpers on a periodic grid of length L with n points.
/// Holds a cached FFT plan, so one instance must not be shared across threads.
class Spectral {
 public:
  Spectral(int n, double length);

  int size() const { return n_; }
  /// Angular wavenumbers 2 pi j / L in FFT order, Nyquist entry positive.
  const Eigen::VectorXd& wavenumbers() const { return k_; }

  Eigen::VectorXcd forward(const Eigen::VectorXd& f) const;
  Eigen::VectorXd inverse(const Eigen::VectorXcd& fh) const;

  /// (i k)^order with the Nyquist entry zeroed for odd order.
  Eigen::VectorXcd derivative_symbol(int order) const;

  Eigen::VectorXd derivative(const Eigen::VectorXd& f, int order) const;
  /// Zero-mean antiderivative; the mean of f is ignored.
  Eigen::VectorXd antiderivative(const Eigen::VectorXd& f) const;

 private:
  int n_;
  Eigen::VectorXd k_;
  mutable Eigen::FFT<double> fft_;
};

}  // namespace ostro
