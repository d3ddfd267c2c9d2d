#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subshift {

enum class ErrorCode {
  // shift construction and word roots
  EmptyShift,
  NotCommuting,
  PowersDiffer,
  Inconsistent,
  // algebra
  RingMismatch,
  ShiftMismatch,
  // reduction
  InternalNonzeroViolation,
  RootExtractionFailure,
  ZeroInput,
  // structure
  NotInCorner,
  NotMinimalCycle,
  NotADomain,
  // surface syntax
  DuplicateSymbol,
  EmptyAlphabet,
  IllegalForbiddenWord,
  SyntaxError,
  UnknownLetter,
  BadScalarForRing,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` identifies the
/// failure class, `what()` carries a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subshift
