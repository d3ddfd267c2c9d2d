#include "subshift/error.hpp"

namespace subshift {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyShift: return "EmptyShift";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::PowersDiffer: return "PowersDiffer";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ShiftMismatch: return "ShiftMismatch";
    case ErrorCode::InternalNonzeroViolation: return "InternalNonzeroViolation";
    case ErrorCode::RootExtractionFailure: return "RootExtractionFailure";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotInCorner: return "NotInCorner";
    case ErrorCode::NotMinimalCycle: return "NotMinimalCycle";
    case ErrorCode::NotADomain: return "NotADomain";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorCode::IllegalForbiddenWord: return "IllegalForbiddenWord";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::BadScalarForRing: return "BadScalarForRing";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace subshift
