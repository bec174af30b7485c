#include "lht/error.hpp"

namespace lht {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::NegativePart: return "NegativePart";
    case ErrorCode::EmptyPartition: return "EmptyPartition";
    case ErrorCode::MTooSmall: return "MTooSmall";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::MalformedPathSystem: return "MalformedPathSystem";
    case ErrorCode::CellOutOfShape: return "CellOutOfShape";
    case ErrorCode::NoCoalescence: return "NoCoalescence";
    case ErrorCode::InadmissibleProfile: return "InadmissibleProfile";
    case ErrorCode::UndefinedAtX: return "UndefinedAtX";
    case ErrorCode::SingularAtX: return "SingularAtX";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::SingularKasteleyn: return "SingularKasteleyn";
    case ErrorCode::CoordinateOutOfRange: return "CoordinateOutOfRange";
    case ErrorCode::DomainBoundary: return "DomainBoundary";
    case ErrorCode::MismatchedScene: return "MismatchedScene";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace lht
