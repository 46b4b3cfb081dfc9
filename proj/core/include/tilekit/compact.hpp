#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tilekit/design.hpp"
#include "tilekit/model.hpp"
#include "tilekit/sim.hpp"

namespace tilekit {

// A b-bit tile value; bit (b-1-k) holds the k-th variable of a face.
using Value = std::uint32_t;

// Relative grid offset (d_row, d_col). Rows grow north, columns grow west, so
// (0, -1) is the east neighbour and (-1, 0) the south neighbour.
struct Offset {
  int row = 0;
  int col = 0;

  auto operator<=>(const Offset&) const = default;
};

// Which values each pad carries, relative to the tile at (i, j). The west
// and north pads are the east/south windows shifted by one column/row, which
// makes every output pad equal the matching input pad of its neighbour.
struct PadWindow {
  int way = 2;
  std::vector<Offset> east;
  std::vector<Offset> south;

  std::vector<Offset> west() const;
  std::vector<Offset> north() const;
  // Distinct offsets of east then south; a tile type is one value per offset.
  std::vector<Offset> neighborhood() const;
};

// way 2 and 3 are the compact windows; way 1 is the plain single-value pad of
// an untransformed design, kept for baseline comparisons.
PadWindow pad_window(int way);

struct CompactDesign {
  TileDesign base;
  int way = 2;
  std::vector<Value> hframe;  // V(0, j) for j = 1..
  std::vector<Value> vframe;  // V(i, 0) for i = 1..
};

// Glue number -> (axis, value tuple) for every pad glue.
struct PadCodec {
  int way = 2;
  int bits = 1;
  std::map<GlueId, std::pair<Axis, std::vector<Value>>> pads;
};

struct CompactResult {
  TileSystem system;
  PadCodec codec;
  std::size_t rule_tiles = 0;
  std::size_t seed = 0;  // 0-based index of the corner frame tile
};

// Per-tile value function F(east value, south value) of a design whose north
// and west outputs coincide.
class ValueRule {
 public:
  explicit ValueRule(const TileDesign& design);

  int bits() const { return bits_; }
  Value operator()(Value east, Value south) const {
    return table_[(static_cast<std::size_t>(east) << bits_) | south];
  }

 private:
  int bits_ = 1;
  std::vector<Value> table_;
};

CompactResult compact_transform(const CompactDesign& design);

// Error-free values V(i, j), 0 <= i, j < n, from the frames. Frames shorter
// than the grid repeat cyclically. V(0, 0) is the first horizontal frame value.
std::vector<std::vector<Value>> value_grid(const CompactDesign& design, int n);

// Values read back from a simulated compact assembly, keyed (i, j) with
// i = y and j = -x relative to the corner seed.
std::map<std::pair<int, int>, Value> decode_values(const SimReport& report,
                                                   const TileSystem& system,
                                                   const PadCodec& codec);

// Minimum number of pad mismatches that lock in a wrong value at one site.
//
// For each site (i, j) with 1 <= i, j <= n-3 and each tile type whose value
// differs from V(i, j), every earlier site (row-major) holds its correct tile;
// every later site may hold any tile type. The cost is the number of input
// edges (east, south) whose pads disagree. Exhaustive branch and bound over
// all such completions; the minimum over sites and wrong tiles is returned.
// Sites within two rows/columns of the north/west border are skipped because
// there a corruption can leave the grid before any pad re-checks it.
//
// cd.way may be 1 to analyse the untransformed design.
int resilience_analysis(const CompactDesign& design, int n);

std::vector<Value> parse_frame_values(std::string_view text, int bits);
std::string format_value(Value v, int bits);

// Sidecar: `% compact way=<k> bits=<b>` then `glue axis v1 v2 ...` lines.
std::string emit_codec(const PadCodec& codec);
PadCodec parse_codec(std::string_view text);

}  // namespace tilekit
