#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latvar {

enum class ErrorCode {
  CycleDetected,
  RedundantCover,
  DuplicateElement,
  UnknownElement,
  SizeLimitExceeded,
  NoUniqueMinimum,
  NotALattice,
  NotDistributive,
  NotSquare,
  NotMaximalJoinIrreducible,
  NoUniquePredecessor,
  // Internal-consistency failures. These indicate a bug or a broken
  // mathematical assumption, never a user input problem.
  RankExceedsCodim,
  RankMismatch,
  OracleDisagreement,
  CriterionMismatch,
  ParseError,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// True for the codes that signal an internal-consistency failure.
bool is_internal_failure(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace latvar
