#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilekit/model.hpp"

namespace tilekit {

// Where a produced sub-tile sits inside the block of its original tile.
// Rows count bottom-up and columns left-to-right, both from 1.
struct BlockCoord {
  std::size_t original = 0;
  int row = 1;
  int col = 1;

  bool operator==(const BlockCoord&) const = default;
};

struct BlockMap {
  int block_size = 1;
  std::vector<BlockCoord> entries;  // indexed by produced tile

  bool operator==(const BlockMap&) const = default;
};

struct BlockTransform {
  TileSystem system;
  BlockMap map;
};

// Replaces every tile by an m x m block. Boundary glue g on a side becomes
// derived glues (g, k), k = 1..m, shared across tiles; each interior edge gets
// its own fresh strength-1 glue.
//
// Tiles holding a glue of strength >= temperature (frame tiles) have no
// cooperative inputs to proofread; their interiors are bound at full
// temperature so the block still assembles from a single strong bond. Only the
// k = 1 copy of a strong glue keeps its strength; the others drop to 1.
BlockTransform proofread(const TileSystem& system, int m);

// Boundary treatment as in proofread; interior strengths force a serpentine
// order for blocks fed from south and east. m must be even.
BlockTransform snake(const TileSystem& system, int m);

// (row, col) visiting order enforced by the snake interior: ascend the east
// column of each two-column strip, cross at the top, descend, step west.
std::vector<std::pair<int, int>> serpentine_path(int m);

// Strength of the interior bond east of (row, col) for a snake block; that is
// the bond between (row, col) and (row, col + 1).
int snake_horizontal_strength(int m, int row, int col);

// Sidecar format: `% block size <m>` then `subtile-index orig-index i j`
// lines with 1-based tile indices.
std::string emit_blockmap(const BlockMap& map);
BlockMap parse_blockmap(std::string_view text);

}  // namespace tilekit
