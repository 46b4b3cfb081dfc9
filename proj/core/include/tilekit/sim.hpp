#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tilekit/block.hpp"
#include "tilekit/model.hpp"

namespace tilekit {

// Grid position; east is +x, north is +y. Ordered by (y, x).
struct Pos {
  int x = 0;
  int y = 0;

  constexpr std::strong_ordering operator<=>(const Pos& o) const {
    if (auto c = y <=> o.y; c != 0) return c;
    return x <=> o.x;
  }
  constexpr bool operator==(const Pos&) const = default;
};

Pos neighbor(Pos p, Side side);

// Inclusive bounds.
struct Box {
  int min_x = 0;
  int min_y = 0;
  int max_x = 0;
  int max_y = 0;

  // width x height cells with the seed in the south-east corner: inputs
  // arrive from east and south, so growth runs west and north.
  static Box north_west(int width, int height);

  bool contains(Pos p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  std::size_t area() const {
    return static_cast<std::size_t>(max_x - min_x + 1) * static_cast<std::size_t>(max_y - min_y + 1);
  }
};

enum class ScanOrder { Forward, Reverse };

struct SimOptions {
  std::size_t seed = 0;  // 0-based tile index
  int temperature = 2;
  std::size_t max_tiles = 1'000'000;
  Box box = Box::north_west(64, 64);
  // Forward takes the lowest (y, x) attachable site first; Reverse the
  // highest. Used for confluence checks.
  ScanOrder order = ScanOrder::Forward;
};

struct Placement {
  std::size_t tile = 0;
  std::size_t seq = 0;  // 1-based attachment order; the seed is 1
};

struct Assembly {
  std::map<Pos, Placement> cells;
  Pos seed;
  int temperature = 2;
};

struct AttachEvent {
  std::size_t seq = 0;
  Pos pos;
  std::size_t tile = 0;
  int strength = 0;  // matched bond strength at attachment time
  int bonds = 0;     // number of matched edges with positive strength
};

struct NondeterministicSite {
  Pos pos;
  std::vector<std::size_t> candidates;
};

// Abutting non-null glues that differ. `side` is the side of `pos`.
struct Mismatch {
  Pos pos;
  Side side;
};

struct SimReport {
  Assembly assembly;
  std::vector<AttachEvent> events;
  std::vector<NondeterministicSite> nondeterministic;
  std::vector<Mismatch> mismatches;
  // Placements held by a single bond of strength >= tau with no other
  // occupied neighbour.
  std::vector<Pos> facet_attachments;
};

// Irreversible threshold growth from a single seed at the origin.
SimReport simulate(const TileSystem& system, const SimOptions& options);

// Original-tile grid recovered from a block-transformed assembly.
struct MacroAssembly {
  int block_size = 1;
  std::map<Pos, std::size_t> cells;  // macro position -> original tile index
  std::vector<Pos> incomplete;       // blocks with missing sub-tiles
};

// Throws MixedBlock when a block holds sub-tiles of different originals or a
// sub-tile sits at the wrong position inside its block.
MacroAssembly project(const SimReport& report, const BlockMap& map);

struct SerpentineViolation {
  Pos block;            // macro position
  std::size_t step = 0;  // index into serpentine_path where order broke
  std::pair<int, int> before;
  std::pair<int, int> after;
};

struct SerpentineVerdict {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;  // complete blocks not fed from south and east
  std::optional<SerpentineViolation> violation;
};

// For every complete block whose original takes inputs on both its south and
// east sides, attachment order must strictly increase along serpentine_path.
SerpentineVerdict serpentine_check(const SimReport& report, const BlockMap& map,
                                   const TileSystem& transformed);

// One character per tile (cycling through 0-9a-zA-Z), north row first,
// followed by a legend.
std::string render_ascii(const Assembly& assembly, const TileSystem& system);

std::string render_macro_ascii(const MacroAssembly& macro);

// `seq x y tile strength-sum` per line; tile numbers are 1-based.
std::string emit_event_log(const SimReport& report);

}  // namespace tilekit
