#include "tropsing/error.hpp"

namespace tropsing {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotLatticeComplete: return "NotLatticeComplete";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CircuitNotInSubdivision: return "CircuitNotInSubdivision";
    case ErrorCode::NotInUnion: return "NotInUnion";
    case ErrorCode::WrongCodimension: return "WrongCodimension";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::ZeroTorusCoordinate: return "ZeroTorusCoordinate";
    case ErrorCode::DependentPivots: return "DependentPivots";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MalformedFlag: return "MalformedFlag";
    case ErrorCode::InsufficientBoundaryPoints: return "InsufficientBoundaryPoints";
    case ErrorCode::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorCode::RetryExhausted: return "RetryExhausted";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tropsing
