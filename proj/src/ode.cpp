#include "ostro/ode.hpp"

#include <algorithm>
#include <cmath>

namespace ostro {

std::string to_string(OdeMethod method) { return method == OdeMethod::rk4 ? "rk4" : "rk45"; }

Eigen::Vector4d reduction_rhs(const OdeVariant& variant, const PhysParams& params, double zeta,
                              const Eigen::Vector4d& y) {
  const bool x1 = variant.kind == OdeVariant::Kind::x1;
  const double forcing = x1 ? variant.h1(zeta) : 0.0;
  const double drift = x1 ? 0.0 : variant.mu;
  const double v4 = (forcing - (y[1] - drift) * y[2] + params.beta * y[0]) / params.alpha;
  return {y[1], y[2], y[3], v4};
}

namespace {

using Vec = Eigen::Vector4d;

Vec rk4_step(const OdeVariant& var, const PhysParams& p, double z, const Vec& y, double h) {
  const Vec k1 = reduction_rhs(var, p, z, y);
  const Vec k2 = reduction_rhs(var, p, z + 0.5 * h, y + 0.5 * h * k1);
  const Vec k3 = reduction_rhs(var, p, z + 0.5 * h, y + 0.5 * h * k2);
  const Vec k4 = reduction_rhs(var, p, z + h, y + h * k3);
  return y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct DpResult {
  Vec y;
  double err;
};

DpResult dp_step(const OdeVariant& var, const PhysParams& p, double z, const Vec& y, double h,
                 double rtol, double atol) {
  const Vec k1 = reduction_rhs(var, p, z, y);
  const Vec k2 = reduction_rhs(var, p, z + h / 5, y + h * a21 * k1);
  const Vec k3 = reduction_rhs(var, p, z + 3 * h / 10, y + h * (a31 * k1 + a32 * k2));
  const Vec k4 = reduction_rhs(var, p, z + 4 * h / 5, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
  const Vec k5 = reduction_rhs(var, p, z + 8 * h / 9, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
  const Vec k6 = reduction_rhs(var, p, z + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
  const Vec y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
  const Vec k7 = reduction_rhs(var, p, z + h, y5);
  const Vec err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
  double norm = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
    norm = std::max(norm, std::abs(err[i]) / sc);
  }
  return {y5, norm};
}

}  // namespace

OdeTrajectory ode_integrate(const OdeVariant& variant, const PhysParams& params,
                            const OdeState& initial, double step, double span, OdeMethod method,
                            double rtol) {
  if (!(step > 0.0) || !(span >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "ODE step must be positive and span non-negative");
  }
  const long count = std::lround(span / step);
  OdeTrajectory out;
  out.states.reserve(static_cast<std::size_t>(count + 1));
  out.states.push_back(initial);
  Vec y = initial.y;
  double h = step;
  const double atol = 1e-3 * rtol;
  for (long k = 1; k <= count; ++k) {
    const double z0 = initial.zeta + static_cast<double>(k - 1) * step;
    const double z1 = initial.zeta + static_cast<double>(k) * step;
    if (method == OdeMethod::rk4) {
      y = rk4_step(variant, params, z0, y, z1 - z0);
    } else {
      double z = z0;
      while (z < z1) {
        h = std::min(h, z1 - z);
        if (h < 1e-12 && z1 - z >= 1e-12) {
          throw Error(ErrorKind::StepUnderflow, "adaptive step fell below 1e-12 at zeta = " + std::to_string(z));
        }
        const auto r = dp_step(variant, params, z, y, h, rtol, atol);
        if (!r.y.allFinite() || !std::isfinite(r.err)) {
          y = r.y;
          break;
        }
        const double fac = r.err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(r.err, -0.2), 0.2, 5.0);
        if (r.err <= 1.0) {
          z = (z1 - z - h <= 1e-15 * std::max(1.0, std::abs(z1))) ? z1 : z + h;
          y = r.y;
        }
        h *= fac;
      }
    }
    if (!y.allFinite()) {
      out.status = OdeTrajectory::Status::non_finite;
      out.message = "non-finite state at zeta = " + std::to_string(z1);
      return out;
    }
    out.states.push_back({z1, y});
  }
  return out;
}

}  // namespace ostro
