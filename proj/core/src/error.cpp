#include "algebroid/error.hpp"

namespace algebroid {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroUpToPrecision: return "ZeroUpToPrecision";
    case ErrorCode::kInsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::kNotAPerfectPower: return "NotAPerfectPower";
    case ErrorCode::kNonMonic: return "NonMonic";
    case ErrorCode::kEpsilonBeyondPrecision: return "EpsilonBeyondPrecision";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateVariable: return "DuplicateVariable";
    case ErrorCode::kNonPositiveExponent: return "NonPositiveExponent";
    case ErrorCode::kNotNumericalSemigroup: return "NotNumericalSemigroup";
    case ErrorCode::kNotNonIncreasing: return "NotNonIncreasing";
    case ErrorCode::kInvalidBranch: return "InvalidBranch";
    case ErrorCode::kGcdNotOne: return "GcdNotOne";
    case ErrorCode::kBaseNotInSemigroup: return "BaseNotInSemigroup";
    case ErrorCode::kLiftNotSemigroup: return "LiftNotSemigroup";
    case ErrorCode::kNotPlane: return "NotPlane";
    case ErrorCode::kNotMember: return "NotMember";
    case ErrorCode::kInternalMismatch: return "InternalMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

SyntaxError::SyntaxError(ErrorCode code, const std::string& message, int line,
                         int column)
    : Error(code, message + " at line " + std::to_string(line) + ", column " +
                      std::to_string(column)),
      line_(line),
      column_(column) {}

void internal_mismatch(const std::string& what) {
  throw Error(ErrorCode::kInternalMismatch, "internal cross-check failed: " + what);
}

}  // namespace algebroid
