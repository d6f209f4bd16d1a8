#include "marf/error.hpp"

namespace marf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotLiftable: return "NotLiftable";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ClassificationMismatch: return "ClassificationMismatch";
    case ErrorCode::NormalFormUnreachable: return "NormalFormUnreachable";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotHyperbolicElement: return "NotHyperbolic";
    case ErrorCode::SharedAxis: return "SharedAxis";
    case ErrorCode::Infinite: return "Infinite";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::NumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorCode::SearchFailed: return "SearchFailed";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::RelationFailed: return "RelationFailed";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace marf
