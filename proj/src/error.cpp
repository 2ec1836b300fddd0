#include "latgate/error.hpp"

namespace latgate {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadShape: return "BadShape";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kDegenerateForm: return "DegenerateForm";
    case ErrorCode::kNotUnimodularTransform: return "NotUnimodularTransform";
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kNotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorCode::kNotDefinite: return "NotDefinite";
    case ErrorCode::kNotUnimodular: return "NotUnimodular";
    case ErrorCode::kRankCapExceeded: return "RankCapExceeded";
    case ErrorCode::kNoSolution: return "NoSolution";
    case ErrorCode::kNoLoopToSurger: return "NoLoopToSurger";
    case ErrorCode::kInconsistentDimension: return "InconsistentDimension";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kNegativePerturbationNorm: return "NegativePerturbationNorm";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace latgate
