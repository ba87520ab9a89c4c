#include "ostro/pde.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>

#include "ostro/numerics.hpp"

namespace ostro {

std::string to_string(PdeStepper stepper) { return stepper == PdeStepper::rk4 ? "rk4" : "if_rk4"; }

double stability_bound(const Grid1D& grid, double alpha) {
  const double kmax = std::numbers::pi / grid.dx();
  return 2.8 / (std::abs(alpha) * kmax * kmax * kmax);
}

namespace {

using CVec = Eigen::VectorXcd;

class Rhs {
 public:
  Rhs(const Grid1D& grid, const Topography& topo, const PhysParams& params)
      : grid_(grid), topo_(topo), sp_(grid.n(), grid.length()), lin_(grid.n()), ik_half_(grid.n()) {
    const int n = grid.n();
    const auto& k = sp_.wavenumbers();
    const std::complex<double> i(0.0, 1.0);
    for (int j = 0; j < n; ++j) {
      const bool drop = j == 0 || j == n / 2;
      // -alpha (ik)^3 + beta/(ik)
      lin_[j] = drop ? 0.0 : i * params.alpha * k[j] * k[j] * k[j] - i * params.beta / k[j];
      ik_half_[j] = drop ? 0.0 : 0.5 * i * k[j];
    }
    if (topo.is_static()) cached_ = forcing_hat(0.0);
  }

  const CVec& linear() const { return lin_; }
  const Spectral& spectral() const { return sp_; }

  /// Forcing and nonlinear part; the linear part is added by the caller.
  CVec nonlinear(const CVec& uh, double t) const {
    const Eigen::VectorXd u = sp_.inverse(uh);
    CVec r = -ik_half_.cwiseProduct(sp_.forward(u.cwiseProduct(u)));
    r += cached_ ? *cached_ : forcing_hat(t);
    return r;
  }

  CVec full(const CVec& uh, double t) const { return lin_.cwiseProduct(uh) + nonlinear(uh, t); }

 private:
  CVec forcing_hat(double t) const {
    Eigen::VectorXd h(grid_.n());
    for (int j = 0; j < grid_.n(); ++j) h[j] = topo_.eval(grid_.x(j), t).h;
    CVec hh = sp_.forward(h);
    hh[0] = 0.0;
    hh[grid_.n() / 2] = 0.0;
    return hh;
  }

  Grid1D grid_;
  Topography topo_;
  Spectral sp_;
  CVec lin_;
  CVec ik_half_;
  std::optional<CVec> cached_;
};

void record(PdeRun& run, const Rhs& rhs, const CVec& uh, double t, const PhysParams& params) {
  const auto& sp = rhs.spectral();
  const Eigen::VectorXd u = sp.inverse(uh);
  if (!u.allFinite()) {
    throw Error(ErrorKind::NonFiniteState, "non-finite state at t = " + std::to_string(t));
  }
  const double dx = run.grid.dx();
  const Eigen::VectorXd ux = sp.derivative(u, 1);
  const Eigen::VectorXd v = sp.antiderivative(u);
  run.times.push_back(t);
  run.history.push_back(u);
  run.momentum.push_back(0.5 * u.squaredNorm() * dx);
  run.energy.push_back(dx * (0.5 * params.alpha * ux.squaredNorm() - u.array().cube().sum() / 6.0 -
                             0.5 * params.beta * v.squaredNorm()));
  run.mass.push_back(u.sum() * dx);
  run.mean.push_back(u.mean());
}

}  // namespace

PdeRun pde_integrate(const SampledField& u0, const Topography& topo, const PhysParams& params,
                     const PdeOptions& opt) {
  const Grid1D& grid = u0.grid;
  if (!grid.periodic()) throw Error(ErrorKind::NotPeriodic, "PDE solver needs a periodic grid");
  if (grid.n() % 2 != 0) throw Error(ErrorKind::NotPeriodic, "PDE solver needs an even point count");
  if (!(opt.dt > 0.0) || !(opt.t_end >= 0.0) || opt.stride < 1) {
    throw Error(ErrorKind::InvalidArgument, "dt must be positive, t_end non-negative, stride >= 1");
  }
  const double scale = u0.values.cwiseAbs().maxCoeff();
  if (std::abs(u0.values.mean()) > 1e-8 * scale) {
    throw Error(ErrorKind::NonZeroMean, "initial state must have zero mean");
  }
  {
    const auto ha = topo.eval(grid.a(), 0.0);
    const auto hb = topo.eval(grid.b(), 0.0);
    if (std::abs(hb.h - ha.h) > 1e-10 * (1.0 + std::abs(ha.h))) {
      throw Error(ErrorKind::NotPeriodic, "forcing is not periodic on the grid");
    }
  }
  if (opt.stepper == PdeStepper::rk4) {
    const double bound = stability_bound(grid, params.alpha);
    if (opt.dt > bound) {
      std::ostringstream os;
      os.precision(17);
      os << "dt = " << opt.dt << " exceeds the explicit RK4 bound " << bound;
      throw Error(ErrorKind::StabilityViolation, os.str());
    }
  }

  const Rhs rhs(grid, topo, params);
  const auto& sp = rhs.spectral();
  CVec uh = sp.forward(u0.values);
  uh[0] = 0.0;
  uh[grid.n() / 2] = 0.0;

  PdeRun run{grid, opt.dt, opt.t_end, {}, {}, {}, {}, topo.unforced() && topo.is_static(), {}, {}};
  const long steps = std::lround(opt.t_end / opt.dt);
  const double dt = opt.dt;
  record(run, rhs, uh, 0.0, params);

  CVec e_half, e_full;
  if (opt.stepper == PdeStepper::if_rk4) {
    e_half = (rhs.linear() * (0.5 * dt)).array().exp().matrix();
    e_full = (rhs.linear() * dt).array().exp().matrix();
  }
  for (long s = 1; s <= steps; ++s) {
    const double t = static_cast<double>(s - 1) * dt;
    if (opt.stepper == PdeStepper::rk4) {
      const CVec k1 = rhs.full(uh, t);
      const CVec k2 = rhs.full(uh + 0.5 * dt * k1, t + 0.5 * dt);
      const CVec k3 = rhs.full(uh + 0.5 * dt * k2, t + 0.5 * dt);
      const CVec k4 = rhs.full(uh + dt * k3, t + dt);
      uh += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    } else {
      const CVec k1 = rhs.nonlinear(uh, t);
      const CVec k2 = rhs.nonlinear(e_half.cwiseProduct(uh + 0.5 * dt * k1), t + 0.5 * dt);
      const CVec k3 = rhs.nonlinear(e_half.cwiseProduct(uh) + 0.5 * dt * k2, t + 0.5 * dt);
      const CVec k4 = rhs.nonlinear(e_full.cwiseProduct(uh) + dt * e_half.cwiseProduct(k3), t + dt);
      uh = e_full.cwiseProduct(uh) +
           dt / 6.0 * (e_full.cwiseProduct(k1) + 2.0 * e_half.cwiseProduct(k2 + k3) + k4);
    }
    uh[0] = 0.0;
    if (s % opt.stride == 0 || s == steps) record(run, rhs, uh, static_cast<double>(s) * dt, params);
  }
  return run;
}

}  // namespace ostro
