#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropsing {

enum class ErrorCode {
  DegenerateConfiguration,
  NotLatticeComplete,
  DuplicatePoint,
  InvalidArgument,
  CircuitNotInSubdivision,
  NotInUnion,
  WrongCodimension,
  NotRealizable,
  ZeroTorusCoordinate,
  DependentPivots,
  TooLarge,
  MalformedFlag,
  InsufficientBoundaryPoints,
  ZeroCoefficient,
  RetryExhausted,
  NegativeExponent,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain failure carrying a machine-readable code. ParseError is the only
/// code the CLI maps to exit status 2; every other code maps to 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropsing
