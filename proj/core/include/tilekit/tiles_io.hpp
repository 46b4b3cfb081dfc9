#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tilekit/model.hpp"

namespace tilekit {

// Xgrow `.tiles` layout:
//
//   tile edges matches {{N E S W}*}
//   num tile types=<T>
//   num binding types=<B>
//   tile edges={
//   {n e s w}    % label
//   }
//   binding strengths={s1 ... sB}
//
// Temperature is a simulator run option and is not part of the file.
std::string emit_tiles(const TileSystem& system);

// Accepts the layout above plus `%` comments anywhere, a `[x]` stoichiometry
// suffix after a tile and arbitrary whitespace. Glue meanings are not stored
// in the file, so parsed glues carry strengths only.
TileSystem parse_tiles(std::string_view text);

// A system plus the `%` comment lines that precede it (version banner etc.).
struct TilesDocument {
  std::vector<std::string> comments;
  TileSystem system;
};

std::string emit_document(const TilesDocument& document);
TilesDocument parse_document(std::string_view text);

}  // namespace tilekit
