#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace algebroid {

enum class ErrorCode {
  kZeroUpToPrecision,
  kInsufficientPrecision,
  kNotAPerfectPower,
  kNonMonic,
  kEpsilonBeyondPrecision,
  kInvalidArgument,
  kSyntaxError,
  kDuplicateVariable,
  kNonPositiveExponent,
  kNotNumericalSemigroup,
  kNotNonIncreasing,
  kInvalidBranch,
  kGcdNotOne,
  kBaseNotInSemigroup,
  kLiftNotSemigroup,
  kNotPlane,
  kNotMember,
  kInternalMismatch,
};

/// Stable machine-readable name, e.g. "InsufficientPrecision".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying a 1-based line/column into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, const std::string& message, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Throws kInternalMismatch. Used for cross-checks between independent routes.
[[noreturn]] void internal_mismatch(const std::string& what);

}  // namespace algebroid
