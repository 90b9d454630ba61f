#include "gradus/errors.hpp"

namespace gradus {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::TorsionQuotient: return "TorsionQuotient";
    case ErrorCode::InfiniteIndex: return "InfiniteIndex";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::DegenerateSplitting: return "DegenerateSplitting";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::AmbiguousSign: return "AmbiguousSign";
    case ErrorCode::NumericAmbiguity: return "NumericAmbiguity";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::NoMorphism: return "NoMorphism";
    case ErrorCode::Ambiguous: return "Ambiguous";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

}  // namespace gradus
