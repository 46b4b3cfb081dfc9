#include "tilekit/sim.hpp"

#include <algorithm>
#include <set>
#include <string_view>

#include "tilekit/error.hpp"

namespace tilekit {

Pos neighbor(Pos p, Side side) {
  switch (side) {
    case Side::North: return {p.x, p.y + 1};
    case Side::East: return {p.x + 1, p.y};
    case Side::South: return {p.x, p.y - 1};
    case Side::West: return {p.x - 1, p.y};
  }
  return p;
}

Box Box::north_west(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(Errc::InvalidArgument, "bounding box must be at least 1x1");
  }
  return Box{-(width - 1), 0, 0, height - 1};
}

namespace {

struct Support {
  int strength = 0;
  int bonds = 0;
  int neighbors = 0;
};

class Grower {
 public:
  Grower(const TileSystem& system, const SimOptions& options)
      : system_(system), options_(options) {
    for (std::size_t i = 0; i < system.tiles.size(); ++i) {
      for (Side side : kSides) {
        const GlueId g = system.tiles[i].glue(side);
        if (system.glues.strength(g) > 0) by_glue_[static_cast<int>(side)][g].push_back(i);
      }
    }
  }

  SimReport run() {
    SimReport report;
    report.assembly.seed = Pos{0, 0};
    report.assembly.temperature = options_.temperature;
    place(report, Pos{0, 0}, options_.seed, Support{});
    std::set<Pos> seen_ambiguous;

    while (!attachable_.empty() && report.events.size() < options_.max_tiles &&
           report.assembly.cells.size() < options_.box.area()) {
      auto it = options_.order == ScanOrder::Forward ? attachable_.begin()
                                                      : std::prev(attachable_.end());
      const Pos site = it->first;
      const std::vector<std::size_t> candidates = it->second;
      if (candidates.size() > 1 && seen_ambiguous.insert(site).second) {
        report.nondeterministic.push_back({site, candidates});
      }
      const std::size_t tile = *std::min_element(candidates.begin(), candidates.end());
      place(report, site, tile, support(site, tile, report.assembly));
    }

    scan_mismatches(report);
    return report;
  }

 private:
  Support support(Pos site, std::size_t tile, const Assembly& assembly) const {
    Support s;
    const Tile& t = system_.tiles[tile];
    for (Side side : kSides) {
      auto it = assembly.cells.find(neighbor(site, side));
      if (it == assembly.cells.end()) continue;
      ++s.neighbors;
      const GlueId mine = t.glue(side);
      const GlueId theirs = system_.tiles[it->second.tile].glue(opposite(side));
      const int strength = bond_strength(system_.glues, mine, theirs);
      if (strength > 0) {
        s.strength += strength;
        ++s.bonds;
      }
    }
    return s;
  }

  void refresh(Pos site, const Assembly& assembly) {
    attachable_.erase(site);
    if (!options_.box.contains(site) || assembly.cells.contains(site)) return;
    // Only tiles bonding to some placed neighbour can gain strength.
    std::vector<std::size_t> pool;
    for (Side side : kSides) {
      auto it = assembly.cells.find(neighbor(site, side));
      if (it == assembly.cells.end()) continue;
      const GlueId facing = system_.tiles[it->second.tile].glue(opposite(side));
      const auto& index = by_glue_[static_cast<int>(side)];
      if (auto hit = index.find(facing); hit != index.end()) {
        pool.insert(pool.end(), hit->second.begin(), hit->second.end());
      }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<std::size_t> candidates;
    for (std::size_t i : pool) {
      if (support(site, i, assembly).strength >= options_.temperature) candidates.push_back(i);
    }
    if (!candidates.empty()) attachable_.emplace(site, std::move(candidates));
  }

  void place(SimReport& report, Pos site, std::size_t tile, Support s) {
    const std::size_t seq = report.events.size() + 1;
    report.assembly.cells.emplace(site, Placement{tile, seq});
    report.events.push_back({seq, site, tile, s.strength, s.bonds});
    if (seq > 1 && s.bonds == 1 && s.neighbors == 1) report.facet_attachments.push_back(site);
    attachable_.erase(site);
    for (Side side : kSides) refresh(neighbor(site, side), report.assembly);
  }

  void scan_mismatches(SimReport& report) const {
    for (const auto& [pos, placed] : report.assembly.cells) {
      for (Side side : {Side::East, Side::North}) {
        auto it = report.assembly.cells.find(neighbor(pos, side));
        if (it == report.assembly.cells.end()) continue;
        const GlueId mine = system_.tiles[placed.tile].glue(side);
        const GlueId theirs = system_.tiles[it->second.tile].glue(opposite(side));
        if (mine != kNullGlue && theirs != kNullGlue && mine != theirs) {
          report.mismatches.push_back({pos, side});
        }
      }
    }
  }

  const TileSystem& system_;
  const SimOptions& options_;
  std::map<Pos, std::vector<std::size_t>> attachable_;
  std::map<GlueId, std::vector<std::size_t>> by_glue_[4];  // per side of the candidate
};

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

struct BlockCells {
  std::size_t original = 0;
  std::map<std::pair<int, int>, std::size_t> seq_at;  // (row, col) -> seq
};

// Groups placed sub-tiles into m x m blocks aligned on the seed's block.
std::map<Pos, BlockCells> group_blocks(const SimReport& report, const BlockMap& map) {
  const int m = map.block_size;
  const auto& cells = report.assembly.cells;
  auto seed_it = cells.find(report.assembly.seed);
  if (seed_it == cells.end()) return {};
  auto coord = [&](std::size_t tile) -> const BlockCoord& {
    if (tile >= map.entries.size()) {
      throw Error(Errc::InvalidArgument,
                  "tile " + std::to_string(tile + 1) + " is not covered by the block map");
    }
    return map.entries[tile];
  };
  const BlockCoord& sc = coord(seed_it->second.tile);
  const int anchor_x = report.assembly.seed.x - (sc.col - 1);
  const int anchor_y = report.assembly.seed.y - (sc.row - 1);

  std::map<Pos, BlockCells> blocks;
  for (const auto& [pos, placed] : cells) {
    const BlockCoord& c = coord(placed.tile);
    const Pos macro{floor_div(pos.x - anchor_x, m), floor_div(pos.y - anchor_y, m)};
    const int col = pos.x - anchor_x - macro.x * m + 1;
    const int row = pos.y - anchor_y - macro.y * m + 1;
    if (c.row != row || c.col != col) {
      throw Error(Errc::MixedBlock, "sub-tile (" + std::to_string(c.row) + "," +
                                        std::to_string(c.col) + ") of original " +
                                        std::to_string(c.original + 1) + " sits at block offset (" +
                                        std::to_string(row) + "," + std::to_string(col) +
                                        ") of block " + std::to_string(macro.x) + "," +
                                        std::to_string(macro.y));
    }
    auto [it, fresh] = blocks.try_emplace(macro);
    if (fresh) {
      it->second.original = c.original;
    } else if (it->second.original != c.original) {
      throw Error(Errc::MixedBlock, "block " + std::to_string(macro.x) + "," +
                                        std::to_string(macro.y) + " mixes originals " +
                                        std::to_string(it->second.original + 1) + " and " +
                                        std::to_string(c.original + 1));
    }
    it->second.seq_at[{row, col}] = placed.seq;
  }
  return blocks;
}

char tile_char(std::size_t index) {
  static constexpr std::string_view kChars =
      "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  return kChars[index % kChars.size()];
}

}  // namespace

SimReport simulate(const TileSystem& system, const SimOptions& options) {
  if (options.seed >= system.tiles.size()) {
    throw Error(Errc::SeedOutOfRange, "seed tile " + std::to_string(options.seed + 1) +
                                          " outside 1.." + std::to_string(system.tiles.size()));
  }
  if (options.temperature < 1) throw Error(Errc::InvalidArgument, "temperature must be >= 1");
  if (options.max_tiles < 1) throw Error(Errc::InvalidArgument, "max-tiles must be >= 1");
  if (!options.box.contains(Pos{0, 0})) {
    throw Error(Errc::InvalidArgument, "bounding box must contain the seed at the origin");
  }
  return Grower(system, options).run();
}

MacroAssembly project(const SimReport& report, const BlockMap& map) {
  MacroAssembly macro;
  macro.block_size = map.block_size;
  const auto full = static_cast<std::size_t>(map.block_size) * static_cast<std::size_t>(map.block_size);
  for (const auto& [pos, block] : group_blocks(report, map)) {
    if (block.seq_at.size() == full) {
      macro.cells.emplace(pos, block.original);
    } else {
      macro.incomplete.push_back(pos);
    }
  }
  return macro;
}

SerpentineVerdict serpentine_check(const SimReport& report, const BlockMap& map,
                                   const TileSystem& transformed) {
  const int m = map.block_size;
  // Originals fed from south and east: their bottom-right sub-tile has both.
  std::set<std::size_t> fed;
  for (std::size_t i = 0; i < map.entries.size() && i < transformed.tiles.size(); ++i) {
    const BlockCoord& c = map.entries[i];
    const Tile& t = transformed.tiles[i];
    if (c.row == 1 && c.col == m && t.south != kNullGlue && t.east != kNullGlue) {
      fed.insert(c.original);
    }
  }
  const auto path = serpentine_path(m);
  SerpentineVerdict verdict;
  for (const auto& [pos, block] : group_blocks(report, map)) {
    if (block.seq_at.size() != path.size()) continue;
    if (!fed.contains(block.original)) {
      ++verdict.skipped;
      continue;
    }
    ++verdict.checked;
    for (std::size_t k = 1; k < path.size(); ++k) {
      if (block.seq_at.at(path[k - 1]) >= block.seq_at.at(path[k])) {
        if (verdict.passed) {
          verdict.passed = false;
          verdict.violation = SerpentineViolation{pos, k, path[k - 1], path[k]};
        }
        break;
      }
    }
  }
  return verdict;
}

std::string render_ascii(const Assembly& assembly, const TileSystem& system) {
  if (assembly.cells.empty()) return "(empty)\n";
  int min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  bool first = true;
  std::set<std::size_t> used;
  for (const auto& [pos, placed] : assembly.cells) {
    if (first) {
      min_x = max_x = pos.x;
      min_y = max_y = pos.y;
      first = false;
    }
    min_x = std::min(min_x, pos.x);
    max_x = std::max(max_x, pos.x);
    min_y = std::min(min_y, pos.y);
    max_y = std::max(max_y, pos.y);
    used.insert(placed.tile);
  }
  std::string out;
  for (int y = max_y; y >= min_y; --y) {
    for (int x = min_x; x <= max_x; ++x) {
      auto it = assembly.cells.find(Pos{x, y});
      out += it == assembly.cells.end() ? '.' : tile_char(it->second.tile);
    }
    out += '\n';
  }
  out += "legend:\n";
  for (std::size_t t : used) {
    out += "  ";
    out += tile_char(t);
    out += " = tile " + std::to_string(t + 1);
    if (t < system.tiles.size() && !system.tiles[t].label.empty()) {
      out += " (" + system.tiles[t].label + ")";
    }
    out += '\n';
  }
  return out;
}

std::string render_macro_ascii(const MacroAssembly& macro) {
  if (macro.cells.empty()) return "(empty)\n";
  int min_x = macro.cells.begin()->first.x, max_x = min_x;
  int min_y = macro.cells.begin()->first.y, max_y = min_y;
  for (const auto& [pos, orig] : macro.cells) {
    min_x = std::min(min_x, pos.x);
    max_x = std::max(max_x, pos.x);
    min_y = std::min(min_y, pos.y);
    max_y = std::max(max_y, pos.y);
  }
  std::string out;
  for (int y = max_y; y >= min_y; --y) {
    for (int x = min_x; x <= max_x; ++x) {
      auto it = macro.cells.find(Pos{x, y});
      out += it == macro.cells.end() ? '.' : tile_char(it->second);
    }
    out += '\n';
  }
  return out;
}

std::string emit_event_log(const SimReport& report) {
  std::string out;
  for (const AttachEvent& e : report.events) {
    out += std::to_string(e.seq) + ' ' + std::to_string(e.pos.x) + ' ' + std::to_string(e.pos.y) +
           ' ' + std::to_string(e.tile + 1) + ' ' + std::to_string(e.strength) + '\n';
  }
  return out;
}

}  // namespace tilekit
