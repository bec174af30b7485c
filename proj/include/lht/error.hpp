#pragma once

#include <stdexcept>
#include <string>

namespace lht {

enum class ErrorCode {
  NotWeaklyDecreasing,
  NegativePart,
  EmptyPartition,
  MTooSmall,
  ShapeMismatch,
  InvalidTableau,
  NonIntegerResult,
  SearchSpaceTooLarge,
  MalformedPathSystem,
  CellOutOfShape,
  NoCoalescence,
  InadmissibleProfile,
  UndefinedAtX,
  SingularAtX,
  DegenerateDenominator,
  SingularKasteleyn,
  CoordinateOutOfRange,
  DomainBoundary,
  MismatchedScene,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lht
