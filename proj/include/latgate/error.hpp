#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latgate {

enum class ErrorCode {
  kBadShape,
  kNotSymmetric,
  kDegenerateForm,
  kNotUnimodularTransform,
  kNotPositiveDefinite,
  kNotNegativeDefinite,
  kNotDefinite,
  kNotUnimodular,
  kRankCapExceeded,
  kNoSolution,
  kNoLoopToSurger,
  kInconsistentDimension,
  kInvalidK,
  kNegativePerturbationNorm,
  kUnknownId,
  kInvalidParameter,
  kParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& detail);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace latgate
