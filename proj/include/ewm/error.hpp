#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ewm {

enum class ErrorCode {
  InvalidType,
  InvalidInput,
  DimensionMismatch,
  NegativeRootCoordinate,
  GeneratorsOutsideAmbient,
  MissingOmegaBar,
  SupportOutsidePiL,
  SupportClash,
  AlphaNotInLambda,
  NoExpression,
  NoLift,
  Inconsistent,
  UniquenessViolated,
  NotUnique,
  NoCandidate,
  BijectionFailure,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// True for codes that signal contradictory mathematical data rather than a
// malformed request.
bool is_mathematical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ewm
