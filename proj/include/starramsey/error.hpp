#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starramsey {

enum class ErrorCode {
  InvalidInput,
  HypothesisViolated,
  OutOfTheoremRange,
  InternalInconsistency,
  NotApplicable,
  OddOrder,
  EvenOrder,
  NotAPath,
  ColorCountMismatch,
  BudgetExhausted,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries one of the codes above; the CLI
// maps them onto its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace starramsey
