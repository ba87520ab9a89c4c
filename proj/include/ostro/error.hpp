#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ostro {

enum class ErrorKind {
  InvalidArgument,
  NegativeDiscriminant,
  DegenerateDenominator,
  ZeroCoefficient,
  NonPositiveParameter,
  SignMismatch,
  NotRational,
  GridTooSmall,
  NotPeriodic,
  NonZeroMean,
  InsufficientSamples,
  MissingTimeLevels,
  ShapeMismatch,
  StepUnderflow,
  NonFiniteState,
  StabilityViolation,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ostro
