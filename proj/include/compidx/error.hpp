#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compidx {

enum class ErrorCode {
  // digraph validation
  LoopArc,
  DigonArc,
  IntraPartArc,
  MissingCrossArc,
  NotMultipartite,
  VertexOutOfRange,
  InvalidArgument,
  // matrix arithmetic
  DimensionMismatch,
  ExponentOverflow,
  // structure
  NotInU,
  NoDirectedCycle,
  TheoremViolation,
  NotTournament,
  NotCoprime,
  // generators
  InvalidZeta,
  ConsecutiveSamePart,
  ExhaustedTries,
  TooLarge,
  // io
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Internal invariant breaches; everything else is a caller or input problem.
constexpr bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::ExponentOverflow || code == ErrorCode::TheoremViolation;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace compidx
