#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zkring {

enum class ErrorCode {
  kEmptyInput,
  kVertexOutOfRange,
  kMissingVertex,
  kEmptySelection,
  kVertexBudgetExceeded,
  kNotAFace,
  kNotSimple,
  kUnknownCatalogEntry,
  kBadParams,
  kInvalidField,
  kNotAComplex,
  kNotPoincareDuality,
  kSocleNotSpanned,
  kNoValidSplit,
  kVerdictMismatch,
  kDimensionMismatch,
  kNotLsop,
  kNotGorenstein,
  kParse,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zkring
