#pragma once

#include "ostro/error.hpp"

namespace ostro {

/// Dispersion alpha and rotation beta; both must be nonzero.
struct PhysParams {
  double alpha;
  double beta;

  PhysParams(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
    if (alpha == 0.0) throw Error(ErrorKind::InvalidArgument, "alpha must be nonzero");
    if (beta == 0.0) throw Error(ErrorKind::InvalidArgument, "beta must be nonzero");
  }

  friend bool operator==(const PhysParams&, const PhysParams&) = default;
};

}  // namespace ostro
