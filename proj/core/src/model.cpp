#include "tilekit/model.hpp"

#include <set>
#include <tuple>

#include "tilekit/error.hpp"

namespace tilekit {

std::string_view to_string(Axis axis) { return axis == Axis::NS ? "NS" : "EW"; }

GlueId GlueTable::allocate(Axis axis, std::string_view bits, int strength) {
  if (bits.empty()) {
    throw Error(Errc::InvalidArgument, "glue meaning needs a non-empty bit-vector");
  }
  if (strength < 1) {
    throw Error(Errc::InvalidArgument, "allocated glue strength must be >= 1");
  }
  GlueMeaning meaning{axis, std::string(bits)};
  if (auto it = by_meaning_.find(meaning); it != by_meaning_.end()) {
    const Glue& existing = entries_[it->second - 1];
    if (existing.strength != strength) {
      throw Error(Errc::StrengthConflict,
                  "glue " + std::to_string(it->second) + " (" + std::string(to_string(axis)) + " " +
                      meaning.bits + ") has strength " + std::to_string(existing.strength) +
                      ", requested " + std::to_string(strength));
    }
    return it->second;
  }
  const GlueId id = next_unused();
  entries_.push_back(Glue{id, strength, meaning, {}});
  by_meaning_.emplace(std::move(meaning), id);
  return id;
}

GlueId GlueTable::fresh(int strength, std::string label) {
  if (strength < 0) {
    throw Error(Errc::InvalidArgument, "glue strength must be non-negative");
  }
  const GlueId id = next_unused();
  entries_.push_back(Glue{id, strength, std::nullopt, std::move(label)});
  return id;
}

std::optional<GlueId> GlueTable::find(Axis axis, std::string_view bits) const {
  auto it = by_meaning_.find(GlueMeaning{axis, std::string(bits)});
  if (it == by_meaning_.end()) return std::nullopt;
  return it->second;
}

const Glue& GlueTable::at(GlueId id) const {
  if (id == kNullGlue || id > size()) {
    throw Error(Errc::UnknownGlue, "glue " + std::to_string(id) + " is not in the table");
  }
  return entries_[id - 1];
}

int GlueTable::strength(GlueId id) const {
  if (id == kNullGlue) return 0;
  return at(id).strength;
}

void GlueTable::set_strength(GlueId id, int strength) {
  if (strength < 0) {
    throw Error(Errc::InvalidArgument, "glue strength must be non-negative");
  }
  at(id);
  entries_[id - 1].strength = strength;
}

GlueId Tile::glue(Side side) const {
  switch (side) {
    case Side::North: return north;
    case Side::East: return east;
    case Side::South: return south;
    case Side::West: return west;
  }
  return kNullGlue;
}

void TileSystem::validate() const {
  if (tiles.empty()) {
    throw Error(Errc::InvariantViolation, "tile system has no tiles");
  }
  std::set<std::tuple<GlueId, GlueId, GlueId, GlueId, std::string>> seen;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const Tile& t = tiles[i];
    for (Side s : kSides) {
      if (!glues.contains(t.glue(s))) {
        throw Error(Errc::InvariantViolation, "tile " + std::to_string(i + 1) + " references glue " +
                                                  std::to_string(t.glue(s)) + " but only " +
                                                  std::to_string(glues.size()) + " glues exist");
      }
    }
    if (!seen.emplace(t.north, t.east, t.south, t.west, t.label).second) {
      throw Error(Errc::InvariantViolation,
                  "tile " + std::to_string(i + 1) + " duplicates an earlier tile");
    }
  }
}

std::vector<int> TileSystem::strengths() const {
  std::vector<int> out;
  out.reserve(glues.size());
  for (const Glue& g : glues.entries()) out.push_back(g.strength);
  return out;
}

int bond_strength(const GlueTable& table, GlueId a, GlueId b) {
  return glues_match(a, b) ? table.strength(a) : 0;
}

bool same_content(const TileSystem& a, const TileSystem& b) {
  return a.tiles == b.tiles && a.strengths() == b.strengths();
}

}  // namespace tilekit
