#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latscreen {

// Machine-readable failure categories. The CLI maps these onto exit codes and
// echoes the code string in its error document.
enum class ErrorCode {
  kDimensionMismatch,
  kNotSymmetric,
  kNotPositiveDefinite,
  kInvalidArgument,
  kNotPrimitive,
  kNoOrthogonalSplit,
  kLinearlyDependent,
  kZeroVector,
  kNotScreener,
  kNormMismatch,
  kEmptyScreenerSet,
  kNotABasis,
  kInnerProductViolation,
  kUnrecognizedComponent,
  kNotGeneratedByScreeners,
  kNotEven,
  kNoScreenerBasis,
  kGammaUnavailable,
  kOddNorm,
  kOverflow,
  kParse,
};

std::string_view to_string(ErrorCode code);

class LatticeError : public std::runtime_error {
 public:
  LatticeError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latscreen
