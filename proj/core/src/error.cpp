#include "zkring/error.hpp"

namespace zkring {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kMissingVertex: return "MissingVertex";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kVertexBudgetExceeded: return "VertexBudgetExceeded";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kUnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kNotAComplex: return "NotAComplex";
    case ErrorCode::kNotPoincareDuality: return "NotPoincareDuality";
    case ErrorCode::kSocleNotSpanned: return "SocleNotSpanned";
    case ErrorCode::kNoValidSplit: return "NoValidSplit";
    case ErrorCode::kVerdictMismatch: return "VerdictMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotLsop: return "NotLsop";
    case ErrorCode::kNotGorenstein: return "NotGorenstein";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace zkring
