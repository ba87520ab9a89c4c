#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "ostro/params.hpp"
#include "ostro/profile.hpp"

namespace ostro {

/// (V, V', V'', V''') at zeta.
struct OdeState {
  double zeta = 0.0;
  Eigen::Vector4d y = Eigen::Vector4d::Zero();
};

enum class OdeMethod { rk4, rk45 };

/// Right side of the fourth-order reduction written as a first-order system:
/// x1 solves alpha V'''' + V'V'' - beta V = h1(zeta),
/// case2 solves alpha V'''' + (V' - mu) V'' - beta V = 0.
struct OdeVariant {
  enum class Kind { x1, case2 };
  Kind kind = Kind::case2;
  Profile h1;
  double mu = 0.0;

  static OdeVariant x1(Profile h1) { return {Kind::x1, std::move(h1), 0.0}; }
  static OdeVariant case2(double mu) { return {Kind::case2, Profile::zero(), mu}; }
};

struct OdeTrajectory {
  enum class Status { ok, non_finite };
  std::vector<OdeState> states;
  Status status = Status::ok;
  std::string message;
};

Eigen::Vector4d reduction_rhs(const OdeVariant& variant, const PhysParams& params, double zeta,
                              const Eigen::Vector4d& y);

/// States at zeta0 + k*step for k = 0..round(span/step). rk45 is Dormand-Prince with
/// relative tolerance rtol, landing exactly on each output point. Blow-up ends the
/// run early with status non_finite; rk45 steps below 1e-12 throw StepUnderflow.
OdeTrajectory ode_integrate(const OdeVariant& variant, const PhysParams& params,
                            const OdeState& initial, double step, double span,
                            OdeMethod method = OdeMethod::rk4, double rtol = 1e-9);

std::string to_string(OdeMethod method);

}  // namespace ostro
