#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tilekit/design.hpp"
#include "tilekit/model.hpp"
#include "tilekit/sim.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(TILEKIT_FIXTURE_DIR) + "/" + name; }

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline constexpr const char* kLFrame = "5 0 5 4; 3 6 0 6; 5 0 0 6";
inline constexpr std::size_t kCorner = 6;  // 0-based corner seed of the L-frame

inline tilekit::CompileResult sierpinski() {
  return tilekit::compile_design(tilekit::parse_design(read("xor.design")), kLFrame);
}

inline const std::vector<std::string>& round_trip_corpus() {
  static const std::vector<std::string> files = {
      "tiles/blank.tiles",       "tiles/sierpinski.tiles",  "tiles/single_glue.tiles",
      "tiles/commented.tiles",   "tiles/stoichiometry.tiles", "tiles/null_strength.tiles",
      "tiles/spacing.tiles",     "tiles/counter.tiles",     "tiles/unlabeled.tiles",
      "tiles/strong.tiles",      "tiles/proofread2.tiles",  "tiles/snake2.tiles",
      "tiles/compact2.tiles",
  };
  return files;
}

}  // namespace fixtures

namespace oracle {

// All-ones borders under V(i,j) = V(i,j-1) ^ V(i-1,j) give binomial(i+j, i)
// mod 2, which by Lucas is 1 exactly when i and j share no set bit.
inline int pascal_mod2(int i, int j) { return (i & j) == 0 ? 1 : 0; }

// Value bit carried by a tile at grid cell (i, j) = (y, -x): north glue for
// rule and row tiles, west glue for the frame column.
inline int cell_bit(const tilekit::TileSystem& s, const tilekit::Tile& t, int j) {
  const tilekit::Glue& g = s.glues.at(j == 0 ? t.west : t.north);
  if (!g.meaning) return -1;
  return g.meaning->bits == "1" ? 1 : 0;
}

}  // namespace oracle
