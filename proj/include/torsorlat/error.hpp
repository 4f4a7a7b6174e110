#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torsorlat {

enum class ErrorCode {
  NonSquare,
  DimensionMismatch,
  NotInvertible,
  GroupTooLarge,
  NotPeriodic,
  IndexOutOfRange,
  GroupMismatch,
  NotApplicable,
  BadDegree,
  BadRank,
  NotARoot,
  TooLargeForEnumeration,
  ActionDoesNotPreserveForm,
  WrongDegree,
  BadInput,
  NotTransitive,
  OddDegree,
  InconsistentSigma,
  BadFactorId,
  PreconditionViolated,
  WitnessNotFound,
  EntryOverflow,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every library failure is reported through this exception; the code is
/// stable and is what the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace torsorlat
