#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nakayama {

enum class ErrorCode {
  ViolatesStep,
  TooShortProjective,
  BadTail,
  EmptySeries,
  Redundant,
  EmptyCyclic,
  InvalidRelation,
  InvalidModule,
  InfiniteGldim,
  NotCyclic,
  Selfinjective,
  FiltrationMismatch,
  NotFiltered,
  OutOfRange,
  CensusMismatch,
  InvariantViolated,
  Parse,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ViolatesStep: return "ViolatesStep";
    case ErrorCode::TooShortProjective: return "TooShortProjective";
    case ErrorCode::BadTail: return "BadTail";
    case ErrorCode::EmptySeries: return "EmptySeries";
    case ErrorCode::Redundant: return "Redundant";
    case ErrorCode::EmptyCyclic: return "EmptyCyclic";
    case ErrorCode::InvalidRelation: return "InvalidRelation";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::InfiniteGldim: return "InfiniteGldim";
    case ErrorCode::NotCyclic: return "NotCyclic";
    case ErrorCode::Selfinjective: return "Selfinjective";
    case ErrorCode::FiltrationMismatch: return "FiltrationMismatch";
    case ErrorCode::NotFiltered: return "NotFiltered";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::CensusMismatch: return "CensusMismatch";
    case ErrorCode::InvariantViolated: return "InvariantViolated";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Thrown by every operation that rejects its input. The message is
/// prefixed with the error code name so CLI diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nakayama
