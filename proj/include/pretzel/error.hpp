#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

enum class ErrorCode {
  NotDivisible,
  NotMultipleOfFour,
  ZeroPolynomial,
  EmptySpec,
  LengthMismatch,
  TooManyCrossings,
  NotAKnot,
  NotReduced,
  OddM,
  OddK,
  BadParams,
  ParseError,
};

const char* error_name(ErrorCode code);

// Domain error carrying a stable machine-readable code. The CLI prints the
// code name and maps ParseError to exit 2, everything else to exit 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pretzel
