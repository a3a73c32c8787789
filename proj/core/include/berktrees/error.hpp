#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berktrees {

enum class ErrorCode {
  kPrecisionExhausted,
  kDivisionByZero,
  kNotDistinct,
  kSamePoint,
  kIndeterminate,
  kConstantReduction,
  kPortraitInvalid,
  kFamilyIncompatible,
  kVertexImageMissing,
  kProvenanceMissing,
  kNotCompatible,
  kMarkingMismatch,
  kSyntaxError,
  kInvalidArgument,
};

/// Machine-readable name, e.g. "PRECISION_EXHAUSTED".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace berktrees
