#pragma once

#include <stdexcept>
#include <string>

namespace liecap {

enum class ErrorKind {
  MixedFields,
  InvalidField,
  DimensionMismatch,
  NotContained,
  NotAnIdeal,
  NotCentral,
  NotNilpotent,
  WrongDimension,
  UnknownKey,
  EpsilonRequired,
  EpsilonForbidden,
  NotParameterized,
  ZeroEpsilonComparison,
  UnsupportedDimension,
  ResourceLimit,
  NotApplicable,
  SkippedHypothesisFailed,
  ParseError,
  JacobiViolation,
  DivisionByZero,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liecap
