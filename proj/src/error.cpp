#include "ostro/error.hpp"

namespace ostro {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::GridTooSmall: return "GridTooSmall";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::NonZeroMean: return "NonZeroMean";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::MissingTimeLevels: return "MissingTimeLevels";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::NonFiniteState: return "NonFiniteState";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
  }
  return "Unknown";
}

}  // namespace ostro
