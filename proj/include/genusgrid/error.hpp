#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genusgrid {

enum class ErrorKind {
  InvalidLayout,
  SegmentLengthOdd,
  PerimeterMismatch,
  BoundaryEdgeForbidden,
  PolygonCornerForbidden,
  NonUnitEdge,
  DuplicateEdge,
  OutOfBounds,
  InfeasibleDensity,
  OddCycle,
  EdgeNotOnCycle,
  PreconditionOddCrossing,
  PreconditionViolated,
  BudgetExceeded,
  UnbalancedClasses,
  NotPerfect,
  NotExact,
  PatternNotFound,
  InvalidWord,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace genusgrid
