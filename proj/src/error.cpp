#include "circdom/error.hpp"

namespace circdom {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::InvalidChord: return "InvalidChord";
    case ErrorKind::EmptyPrimeWindow: return "EmptyPrimeWindow";
    case ErrorKind::DegenerateInstance: return "DegenerateInstance";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::AuditTooLarge: return "AuditTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace circdom
