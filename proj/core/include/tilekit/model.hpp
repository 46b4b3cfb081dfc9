#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilekit {

using GlueId = std::uint32_t;

// Glue 0 is the null glue: strength 0, never bonds.
inline constexpr GlueId kNullGlue = 0;

// Glue meanings are namespaced per shared-edge axis: a north glue must equal
// the south glue of the tile above, so N/S share one namespace and E/W another.
enum class Axis : std::uint8_t { NS, EW };

std::string_view to_string(Axis axis);

enum class Side : std::uint8_t { North, East, South, West };

inline constexpr Side kSides[] = {Side::North, Side::East, Side::South, Side::West};

constexpr Side opposite(Side s) {
  switch (s) {
    case Side::North: return Side::South;
    case Side::East: return Side::West;
    case Side::South: return Side::North;
    case Side::West: return Side::East;
  }
  return s;
}

struct GlueMeaning {
  Axis axis = Axis::NS;
  std::string bits;

  auto operator<=>(const GlueMeaning&) const = default;
};

struct Glue {
  GlueId number = kNullGlue;
  int strength = 0;
  std::optional<GlueMeaning> meaning;
  std::string label;

  bool operator==(const Glue&) const = default;
};

// Numbers of non-null glues are always the contiguous range 1..size().
class GlueTable {
 public:
  // Returns the glue already carrying (axis, bits), or appends a new one.
  // Throws StrengthConflict if the meaning exists with another strength.
  GlueId allocate(Axis axis, std::string_view bits, int strength);

  // Appends a glue with no meaning. Strength 0 is allowed (named null bond).
  GlueId fresh(int strength, std::string label = {});

  std::optional<GlueId> find(Axis axis, std::string_view bits) const;

  const Glue& at(GlueId id) const;
  int strength(GlueId id) const;
  void set_strength(GlueId id, int strength);

  bool contains(GlueId id) const { return id <= size(); }
  GlueId size() const { return static_cast<GlueId>(entries_.size()); }
  GlueId next_unused() const { return size() + 1; }
  const std::vector<Glue>& entries() const { return entries_; }

  bool operator==(const GlueTable& other) const { return entries_ == other.entries_; }

 private:
  std::vector<Glue> entries_;
  std::map<GlueMeaning, GlueId> by_meaning_;
};

struct Tile {
  GlueId north = kNullGlue;
  GlueId east = kNullGlue;
  GlueId south = kNullGlue;
  GlueId west = kNullGlue;
  std::string label;
  double stoichiometry = 1.0;

  GlueId glue(Side side) const;

  bool operator==(const Tile&) const = default;
};

struct TileSystem {
  GlueTable glues;
  std::vector<Tile> tiles;
  int temperature = 2;

  // Throws InvariantViolation when a tile references a glue outside 0..B,
  // the tile list is empty, or two tiles are identical.
  void validate() const;

  // Binding strengths of glues 1..B in number order.
  std::vector<int> strengths() const;
};

// Two tiles bond across a shared edge iff the abutting glue numbers are equal
// and non-zero. Every consumer of matching goes through these two functions.
constexpr bool glues_match(GlueId a, GlueId b) { return a == b && a != kNullGlue; }

int bond_strength(const GlueTable& table, GlueId a, GlueId b);

// Same tiles and same strength list; glue meanings and labels are ignored.
bool same_content(const TileSystem& a, const TileSystem& b);

}  // namespace tilekit
