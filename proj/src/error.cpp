#include "genusgrid/error.hpp"

namespace genusgrid {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLayout: return "InvalidLayout";
    case ErrorKind::SegmentLengthOdd: return "SegmentLengthOdd";
    case ErrorKind::PerimeterMismatch: return "PerimeterMismatch";
    case ErrorKind::BoundaryEdgeForbidden: return "BoundaryEdgeForbidden";
    case ErrorKind::PolygonCornerForbidden: return "PolygonCornerForbidden";
    case ErrorKind::NonUnitEdge: return "NonUnitEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::OutOfBounds: return "OutOfBounds";
    case ErrorKind::InfeasibleDensity: return "InfeasibleDensity";
    case ErrorKind::OddCycle: return "OddCycle";
    case ErrorKind::EdgeNotOnCycle: return "EdgeNotOnCycle";
    case ErrorKind::PreconditionOddCrossing: return "PreconditionOddCrossing";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnbalancedClasses: return "UnbalancedClasses";
    case ErrorKind::NotPerfect: return "NotPerfect";
    case ErrorKind::NotExact: return "NotExact";
    case ErrorKind::PatternNotFound: return "PatternNotFound";
    case ErrorKind::InvalidWord: return "InvalidWord";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace genusgrid
