#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradus {

enum class ErrorCode {
  Parse,
  InvalidArgument,
  NotCommutative,
  NotAssociative,
  BadIdentity,
  TorsionQuotient,
  InfiniteIndex,
  NotReduced,
  DegenerateSplitting,
  PrecisionExhausted,
  AmbiguousSign,
  NumericAmbiguity,
  EnumerationBudgetExceeded,
  InfiniteGroup,
  NoMorphism,
  Ambiguous,
  InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Failures that a higher working precision may cure. The escalation loops
// in the pipeline catch exactly these.
inline bool is_numeric_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::AmbiguousSign:
    case ErrorCode::NumericAmbiguity:
    case ErrorCode::DegenerateSplitting:
    case ErrorCode::InfiniteGroup:
    case ErrorCode::InternalInconsistency:
      return true;
    default:
      return false;
  }
}

}  // namespace gradus
