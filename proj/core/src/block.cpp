#include "tilekit/block.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tilekit/error.hpp"

namespace tilekit {

namespace {

enum class Layout { Proofread, Snake };

bool is_rigid(const TileSystem& system, const Tile& t) {
  return std::any_of(std::begin(kSides), std::end(kSides), [&](Side s) {
    return system.glues.strength(t.glue(s)) >= system.temperature;
  });
}

BlockTransform transform(const TileSystem& system, int m, Layout layout) {
  system.validate();
  BlockTransform out;
  out.system.temperature = system.temperature;
  out.map.block_size = m;
  GlueTable& glues = out.system.glues;

  std::set<GlueId> used;
  for (const Tile& t : system.tiles) {
    for (Side s : kSides) {
      if (t.glue(s) != kNullGlue) used.insert(t.glue(s));
    }
  }
  // derived[(g, k)] for k = 1..m, numbered glue-then-k. A strong glue stays
  // strong only at k = 1; otherwise a chain of identical frame tiles could grow
  // back into a neighbouring block through its second row.
  std::map<std::pair<GlueId, int>, GlueId> derived;
  for (GlueId g : used) {
    const int s = system.glues.strength(g);
    for (int k = 1; k <= m; ++k) {
      derived[{g, k}] = glues.fresh(k == 1 || s < system.temperature ? s : 1,
                                    std::to_string(g) + "." + std::to_string(k));
    }
  }
  auto boundary = [&](GlueId g, int k) { return g == kNullGlue ? kNullGlue : derived.at({g, k}); };

  const auto cells = static_cast<std::size_t>(m) * static_cast<std::size_t>(m);
  out.system.tiles.reserve(system.tiles.size() * cells);
  out.map.entries.reserve(system.tiles.size() * cells);

  for (std::size_t ti = 0; ti < system.tiles.size(); ++ti) {
    const Tile& orig = system.tiles[ti];
    const bool rigid = is_rigid(system, orig);
    // east_bond[r][c]: bond between (r, c) and (r, c + 1); north_bond[r][c]:
    // bond between (r, c) and (r + 1, c). 1-based, scanned row by row.
    std::vector<std::vector<GlueId>> east_bond(m + 1, std::vector<GlueId>(m + 1, kNullGlue));
    std::vector<std::vector<GlueId>> north_bond(m + 1, std::vector<GlueId>(m + 1, kNullGlue));
    const std::string tag = "t" + std::to_string(ti + 1) + ":";
    for (int r = 1; r <= m; ++r) {
      for (int c = 1; c <= m; ++c) {
        const std::string at = tag + std::to_string(r) + "," + std::to_string(c);
        if (c < m) {
          int strength = 1;
          if (rigid) {
            strength = system.temperature;
          } else if (layout == Layout::Snake) {
            strength = snake_horizontal_strength(m, r, c);
          }
          east_bond[r][c] = glues.fresh(strength, at + ":e");
        }
        if (r < m) {
          north_bond[r][c] = glues.fresh(rigid ? system.temperature : 1, at + ":n");
        }
      }
    }
    const std::string base = orig.label.empty() ? "tile " + std::to_string(ti + 1) : orig.label;
    for (int r = 1; r <= m; ++r) {
      for (int c = 1; c <= m; ++c) {
        Tile sub;
        sub.north = r == m ? boundary(orig.north, c) : north_bond[r][c];
        sub.south = r == 1 ? boundary(orig.south, c) : north_bond[r - 1][c];
        sub.east = c == m ? boundary(orig.east, r) : east_bond[r][c];
        sub.west = c == 1 ? boundary(orig.west, r) : east_bond[r][c - 1];
        sub.label = base + " @" + std::to_string(r) + "," + std::to_string(c);
        sub.stoichiometry = orig.stoichiometry;
        out.system.tiles.push_back(std::move(sub));
        out.map.entries.push_back({ti, r, c});
      }
    }
  }
  return out;
}

}  // namespace

int snake_horizontal_strength(int m, int row, int col) {
  // Strips pair columns from the east: (m-1, m), (m-3, m-2), ... A bond
  // between col and col+1 lies inside a strip iff col+1 is a strip's east column.
  const bool within_strip = (m - (col + 1)) % 2 == 0;
  if (!within_strip) return 1;
  if (row == m) return 2;
  if (row == 1) return 0;
  return 1;
}

BlockTransform proofread(const TileSystem& system, int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "proofread block size must be >= 1");
  return transform(system, m, Layout::Proofread);
}

BlockTransform snake(const TileSystem& system, int m) {
  if (m < 2 || m % 2 != 0) {
    throw Error(Errc::OddM, "snake blocks need an even m >= 2 (m = 2n), got " + std::to_string(m));
  }
  return transform(system, m, Layout::Snake);
}

std::vector<std::pair<int, int>> serpentine_path(int m) {
  std::vector<std::pair<int, int>> path;
  path.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int right = m; right >= 2; right -= 2) {
    for (int r = 1; r <= m; ++r) path.emplace_back(r, right);
    for (int r = m; r >= 1; --r) path.emplace_back(r, right - 1);
  }
  if (m % 2 == 1) {
    for (int r = 1; r <= m; ++r) path.emplace_back(r, 1);
  }
  return path;
}

std::string emit_blockmap(const BlockMap& map) {
  std::string out = "% block size " + std::to_string(map.block_size) + "\n";
  for (std::size_t i = 0; i < map.entries.size(); ++i) {
    const BlockCoord& e = map.entries[i];
    out += std::to_string(i + 1) + ' ' + std::to_string(e.original + 1) + ' ' +
           std::to_string(e.row) + ' ' + std::to_string(e.col) + '\n';
  }
  return out;
}

BlockMap parse_blockmap(std::string_view text) {
  BlockMap map;
  map.block_size = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int declared = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pct = line.find('%'); pct != std::string::npos) {
      std::istringstream comment(line.substr(pct + 1));
      std::string w1, w2;
      int m = 0;
      if (comment >> w1 >> w2 >> m && w1 == "block" && w2 == "size") declared = m;
      line.resize(pct);
    }
    std::istringstream fields(line);
    long sub = 0, orig = 0;
    int row = 0, col = 0;
    if (!(fields >> sub)) continue;
    if (!(fields >> orig >> row >> col) || sub < 1 || orig < 1 || row < 1 || col < 1) {
      throw Error(Errc::SyntaxError, "blockmap line " + std::to_string(line_no) +
                                         ": expected 'subtile-index orig-index i j'");
    }
    if (static_cast<std::size_t>(sub) != map.entries.size() + 1) {
      throw Error(Errc::SyntaxError, "blockmap line " + std::to_string(line_no) +
                                         ": sub-tile indices must be consecutive from 1");
    }
    map.entries.push_back({static_cast<std::size_t>(orig - 1), row, col});
    map.block_size = std::max({map.block_size, row, col});
  }
  if (declared > 0) {
    if (declared < map.block_size) {
      throw Error(Errc::SyntaxError, "blockmap entries exceed the declared block size");
    }
    map.block_size = declared;
  }
  if (map.block_size == 0) map.block_size = 1;
  return map;
}

}  // namespace tilekit
