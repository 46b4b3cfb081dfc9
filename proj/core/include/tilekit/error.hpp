#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilekit {

// One code per failure the library can report. Callers (the CLI in
// particular) switch on the code; the message carries the details.
enum class Errc {
  InvalidArgument,
  StrengthConflict,
  SyntaxError,
  UndeclaredVariable,
  DuplicateVariable,
  DuplicateFace,
  MissingFace,
  UnboundVariable,
  WidthOverflow,
  WidthMismatch,
  ParseError,
  TrailingSemicolon,
  InvariantViolation,
  CountMismatch,
  UnknownGlue,
  OddM,
  NorthWestMismatch,
  UnsupportedWay,
  SeedOutOfRange,
  MixedBlock,
  Io,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tilekit
