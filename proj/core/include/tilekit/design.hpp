#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tilekit/expr.hpp"
#include "tilekit/model.hpp"

namespace tilekit {

// A computational tile: input variables arrive on the east and south faces,
// output expressions leave on the north and west faces.
struct TileDesign {
  std::vector<std::string> east;
  std::vector<std::string> south;
  std::vector<Expr> north;
  std::vector<Expr> west;
  std::vector<std::string> warnings;
};

// Design file: one `face: entry, entry, ...` line per face (east, south,
// north, west; any order, each exactly once). `#` starts a comment.
TileDesign parse_design(std::string_view text);

struct EnumerateOptions {
  std::size_t max_tiles = std::size_t{1} << 16;
};

struct TileFragment {
  std::vector<Tile> tiles;
  std::vector<std::string> warnings;
};

// One tile per assignment of the east+south input bits, east bits high-order,
// counting up from all zeros. Glues are allocated scanning N, E, S, W.
TileFragment enumerate_tiles(const TileDesign& design, GlueTable& table,
                             const EnumerateOptions& options = {});

// Frame quadruples "n e s w; n e s w; ..." (no trailing semicolon). Unknown
// glue numbers become meaning-less glues of `default_strength`.
std::vector<Tile> make_frame_tiles(std::string_view spec, GlueTable& table,
                                   int default_strength = 2);

std::string glue_table_report(const GlueTable& table);

struct CompileOptions {
  int frame_strength = 2;
  std::map<GlueId, int> strength_overrides;
  EnumerateOptions enumerate;
};

struct CompileResult {
  TileSystem system;
  std::vector<std::string> warnings;
  std::size_t rule_tiles = 0;
};

// Computational tiles followed by frame tiles; overrides applied last.
CompileResult compile_design(const TileDesign& design, std::string_view frames,
                             const CompileOptions& options = {});

// The bits a design's output expressions produce for the given input bits.
std::string eval_outputs(const std::vector<Expr>& outputs, const Env& env);

}  // namespace tilekit
