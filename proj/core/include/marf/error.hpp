#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace marf {

enum class ErrorCode {
  NotCoprime,
  NotHyperbolic,
  NotLiftable,
  LengthMismatch,
  NotApplicable,
  BudgetExceeded,
  ClassificationMismatch,
  NormalFormUnreachable,
  Overflow,
  Degenerate,
  NotHyperbolicElement,
  SharedAxis,
  Infinite,
  ModulusMismatch,
  NumericallyAmbiguous,
  SearchFailed,
  Unsupported,
  RelationFailed,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace marf
