#include "ostro/time_profile.hpp"

#include <cmath>
#include <sstream>

namespace ostro {

TimeProfile::Kind TimeProfile::kind() const {
  if (amplitude_ != 0.0) return Kind::sinusoid;
  if (c1_ != 0.0) return Kind::linear;
  if (c0_ != 0.0) return Kind::constant;
  return Kind::zero;
}

std::string to_string(TimeProfile::Kind kind) {
  switch (kind) {
    case TimeProfile::Kind::zero: return "zero";
    case TimeProfile::Kind::constant: return "constant";
    case TimeProfile::Kind::linear: return "linear";
    case TimeProfile::Kind::sinusoid: return "sinusoid";
  }
  return "unknown";
}

std::string TimeProfile::describe() const {
  std::ostringstream os;
  os.precision(17);
  os << to_string(kind()) << "(c0=" << c0_ << ", c1=" << c1_ << ", A=" << amplitude_
     << ", omega=" << omega_ << ", phase=" << phase_ << ")";
  return os.str();
}

double TimeProfile::derivative(double t, int k) const {
  double poly = 0.0;
  if (k == 0) poly = c0_ + c1_ * t;
  if (k == 1) poly = c1_;
  if (amplitude_ == 0.0) return poly;
  // d^k/dt^k sin(w t + p) = w^k sin(w t + p + k pi/2)
  const double arg = omega_ * t + phase_;
  double trig = 0.0;
  switch (k % 4) {
    case 0: trig = std::sin(arg); break;
    case 1: trig = std::cos(arg); break;
    case 2: trig = -std::sin(arg); break;
    default: trig = -std::cos(arg); break;
  }
  return poly + amplitude_ * std::pow(omega_, k) * trig;
}

double TimeProfile::primitive(double t) const {
  double p = c0_ * t + 0.5 * c1_ * t * t;
  if (amplitude_ != 0.0) {
    if (omega_ == 0.0) {
      p += amplitude_ * std::sin(phase_) * t;
    } else {
      p -= amplitude_ / omega_ * (std::cos(omega_ * t + phase_) - std::cos(phase_));
    }
  }
  return p;
}

TimeProfile TimeProfile::affine(double scale, double offset) const {
  return {scale * c0_ + offset, scale * c1_, scale * amplitude_, omega_, phase_};
}

}  // namespace ostro
