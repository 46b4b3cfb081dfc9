#include "tilekit/error.hpp"

namespace tilekit {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::StrengthConflict: return "StrengthConflict";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UndeclaredVariable: return "UndeclaredVariable";
    case Errc::DuplicateVariable: return "DuplicateVariable";
    case Errc::DuplicateFace: return "DuplicateFace";
    case Errc::MissingFace: return "MissingFace";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::WidthOverflow: return "WidthOverflow";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::TrailingSemicolon: return "TrailingSemicolon";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::UnknownGlue: return "UnknownGlue";
    case Errc::OddM: return "OddM";
    case Errc::NorthWestMismatch: return "NorthWestMismatch";
    case Errc::UnsupportedWay: return "UnsupportedWay";
    case Errc::SeedOutOfRange: return "SeedOutOfRange";
    case Errc::MixedBlock: return "MixedBlock";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace tilekit
