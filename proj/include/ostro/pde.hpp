#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "ostro/field.hpp"
#include "ostro/params.hpp"
#include "ostro/topography.hpp"

namespace ostro {

enum class PdeStepper {
  rk4,     ///< classical explicit RK4, subject to the dispersive step bound
  if_rk4,  ///< integrating-factor (Lawson) RK4, linear part exact
};

std::string to_string(PdeStepper stepper);

struct PdeOptions {
  double dt = 1e-5;
  /// Rounded to the nearest whole number of steps.
  double t_end = 1.0;
  /// Store every stride-th step (the first and last are always stored).
  int stride = 1;
  PdeStepper stepper = PdeStepper::rk4;
};

/// Decimated history and monitor series of a periodic run.
struct PdeRun {
  Grid1D grid;
  double dt = 0.0;
  double t_end = 0.0;
  std::vector<double> times;
  std::vector<Eigen::VectorXd> history;
  /// int u^2/2 dx
  std::vector<double> momentum;
  /// int (alpha u_x^2/2 - u^3/6 - beta (d^-1 u)^2/2) dx; only meaningful when h = 0.
  std::vector<double> energy;
  bool energy_valid = false;
  /// int u dx
  std::vector<double> mass;
  /// spatial mean of u
  std::vector<double> mean;
};

/// dt <= 2.8 / (|alpha| (pi/dx)^3).
double stability_bound(const Grid1D& grid, double alpha);

/// u_t = P0[-u u_x - alpha u_xxx + beta d^-1 u + h] with Fourier derivatives, where
/// P0 removes the spatial mean. The state is held in Fourier space.
PdeRun pde_integrate(const SampledField& u0, const Topography& topo, const PhysParams& params,
                     const PdeOptions& options);

}  // namespace ostro
