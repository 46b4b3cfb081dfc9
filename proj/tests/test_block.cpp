#include <doctest.h>

#include <set>

#include "support.hpp"
#include "tilekit/block.hpp"
#include "tilekit/error.hpp"

using namespace tilekit;

namespace {

TileSystem rule_tiles_only() {
  TileSystem s = fixtures::sierpinski().system;
  s.tiles.resize(4);
  TileSystem out;
  for (GlueId g = 1; g <= 4; ++g) out.glues.fresh(s.glues.strength(g));
  out.tiles = s.tiles;
  return out;
}

std::set<GlueId> used_glues(const TileSystem& s) {
  std::set<GlueId> out;
  for (const Tile& t : s.tiles) {
    for (Side side : kSides) {
      if (t.glue(side) != kNullGlue) out.insert(t.glue(side));
    }
  }
  return out;
}

// Glues on the outer edges of blocks, counted by position in the block map.
std::set<GlueId> boundary_glues(const BlockTransform& b) {
  std::set<GlueId> out;
  const int m = b.map.block_size;
  for (std::size_t i = 0; i < b.system.tiles.size(); ++i) {
    const Tile& t = b.system.tiles[i];
    const BlockCoord& c = b.map.entries[i];
    if (c.row == m && t.north) out.insert(t.north);
    if (c.row == 1 && t.south) out.insert(t.south);
    if (c.col == m && t.east) out.insert(t.east);
    if (c.col == 1 && t.west) out.insert(t.west);
  }
  return out;
}

}  // namespace

TEST_CASE("proofread with m = 1 keeps the tile count") {
  const TileSystem s = fixtures::sierpinski().system;
  const BlockTransform b = proofread(s, 1);
  CHECK(b.system.tiles.size() == s.tiles.size());
  for (std::size_t i = 0; i < s.tiles.size(); ++i) {
    CHECK(b.map.entries[i] == BlockCoord{i, 1, 1});
    CHECK(b.system.glues.strength(b.system.tiles[i].north) == s.glues.strength(s.tiles[i].north));
  }
}

TEST_CASE("proofread counts for the xor rule tiles at m = 2") {
  const BlockTransform b = proofread(rule_tiles_only(), 2);
  CHECK(b.system.tiles.size() == 16);
  CHECK(boundary_glues(b).size() == 8);
  CHECK(used_glues(b.system).size() == 8 + 16);
  CHECK(b.system.glues.size() == 8 + 16);
}

TEST_CASE("tile and glue budgets for m = 1..4") {
  const TileSystem s = fixtures::sierpinski().system;
  const std::size_t B = s.glues.size();
  for (int m = 1; m <= 4; ++m) {
    CAPTURE(m);
    for (bool use_snake : {false, true}) {
      if (use_snake && m % 2) continue;
      const BlockTransform b = use_snake ? snake(s, m) : proofread(s, m);
      CHECK(b.system.tiles.size() == static_cast<std::size_t>(m * m) * s.tiles.size());
      CHECK(boundary_glues(b).size() <= static_cast<std::size_t>(m) * B);
      const std::size_t interior = b.system.glues.size() - static_cast<std::size_t>(m) * B;
      CHECK(interior == s.tiles.size() * static_cast<std::size_t>(2 * m * (m - 1)));
      std::map<std::size_t, int> per_original;
      for (const auto& e : b.map.entries) ++per_original[e.original];
      for (const auto& [orig, count] : per_original) CHECK(count == m * m);
      CHECK_NOTHROW(b.system.validate());
    }
  }
}

TEST_CASE("boundary glue placement") {
  const TileSystem s = fixtures::sierpinski().system;
  const int m = 3;
  const BlockTransform b = proofread(s, m);
  // Derived glues come first, glue-then-k.
  const auto derived = [&](GlueId g, int k) { return static_cast<GlueId>((g - 1) * m + k); };
  for (std::size_t i = 0; i < b.system.tiles.size(); ++i) {
    const BlockCoord& c = b.map.entries[i];
    const Tile& orig = s.tiles[c.original];
    const Tile& t = b.system.tiles[i];
    if (c.row == m) CHECK(t.north == (orig.north ? derived(orig.north, c.col) : 0));
    if (c.row == 1) CHECK(t.south == (orig.south ? derived(orig.south, c.col) : 0));
    if (c.col == m) CHECK(t.east == (orig.east ? derived(orig.east, c.row) : 0));
    if (c.col == 1) CHECK(t.west == (orig.west ? derived(orig.west, c.row) : 0));
  }
  // Weak glues keep their strength on every copy.
  for (int k = 1; k <= m; ++k) CHECK(b.system.glues.strength(derived(1, k)) == 1);
  // Strong frame glues stay strong on the first copy only.
  CHECK(b.system.glues.strength(derived(5, 1)) == 2);
  CHECK(b.system.glues.strength(derived(5, 2)) == 1);
}

TEST_CASE("interior glues are unique per tile and edge") {
  const TileSystem s = fixtures::sierpinski().system;
  const BlockTransform b = proofread(s, 3);
  const auto boundary = boundary_glues(b);
  std::map<GlueId, int> uses;
  for (const Tile& t : b.system.tiles) {
    for (Side side : kSides) {
      if (t.glue(side) && !boundary.contains(t.glue(side))) ++uses[t.glue(side)];
    }
  }
  for (const auto& [g, n] : uses) CHECK(n == 2);
  CHECK(uses.size() == s.tiles.size() * 12);
}

TEST_CASE("rule tile interiors are strength 1 under proofreading") {
  const BlockTransform b = proofread(rule_tiles_only(), 3);
  for (GlueId g = 4 * 3 + 1; g <= b.system.glues.size(); ++g) CHECK(b.system.glues.strength(g) == 1);
}

TEST_CASE("snake 2x2 block interior strengths") {
  TileSystem one;
  one.glues.fresh(1);
  one.glues.fresh(1);
  one.tiles.push_back({1, 2, 1, 2, "t"});
  const BlockTransform b = snake(one, 2);
  // (1,1) (1,2) (2,1) (2,2)
  const Tile& sw = b.system.tiles[0];
  const Tile& se = b.system.tiles[1];
  const Tile& nw = b.system.tiles[2];
  const Tile& ne = b.system.tiles[3];
  const GlueTable& g = b.system.glues;
  CHECK(sw.north == nw.south);
  CHECK(se.north == ne.south);
  CHECK(sw.east == se.west);
  CHECK(nw.east == ne.west);
  const std::multiset<int> strengths{g.strength(sw.north), g.strength(se.north), g.strength(nw.east),
                                     g.strength(sw.east)};
  CHECK(strengths == std::multiset<int>{1, 1, 2, 0});
  CHECK(g.strength(nw.east) == 2);
  CHECK(g.strength(sw.east) == 0);
  CHECK(sw.east != kNullGlue);
}

TEST_CASE("snake rejects odd m") {
  const TileSystem s = fixtures::sierpinski().system;
  for (int m : {0, 1, 3, 5}) {
    try {
      snake(s, m);
      FAIL("expected OddM");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::OddM);
    }
  }
  CHECK_THROWS_AS(proofread(s, 0), Error);
}

TEST_CASE("serpentine path") {
  using P = std::pair<int, int>;
  CHECK(serpentine_path(2) == std::vector<P>{{1, 2}, {2, 2}, {2, 1}, {1, 1}});
  CHECK(serpentine_path(4) == std::vector<P>{{1, 4}, {2, 4}, {3, 4}, {4, 4}, {4, 3}, {3, 3}, {2, 3},
                                              {1, 3}, {1, 2}, {2, 2}, {3, 2}, {4, 2}, {4, 1}, {3, 1},
                                              {2, 1}, {1, 1}});
}

TEST_CASE("snake horizontal strengths for m = 4") {
  // Strips (3,4) and (1,2); the bond between strips is col 2 -> 3.
  for (int r = 1; r <= 4; ++r) CHECK(snake_horizontal_strength(4, r, 2) == 1);
  CHECK(snake_horizontal_strength(4, 4, 3) == 2);
  CHECK(snake_horizontal_strength(4, 1, 3) == 0);
  CHECK(snake_horizontal_strength(4, 2, 3) == 1);
  CHECK(snake_horizontal_strength(4, 4, 1) == 2);
  CHECK(snake_horizontal_strength(4, 1, 1) == 0);
}

TEST_CASE("block map text round trip") {
  const BlockTransform b = snake(fixtures::sierpinski().system, 2);
  const std::string text = emit_blockmap(b.map);
  CHECK(text.rfind("% block size 2\n1 1 1 1\n2 1 1 2\n", 0) == 0);
  CHECK(parse_blockmap(text) == b.map);
  CHECK_THROWS_AS(parse_blockmap("1 1 1\n"), Error);
  CHECK_THROWS_AS(parse_blockmap("2 1 1 1\n"), Error);
}

TEST_CASE("transforms are deterministic") {
  const TileSystem s = fixtures::sierpinski().system;
  const BlockTransform a = snake(s, 4);
  const BlockTransform b = snake(s, 4);
  CHECK(a.system.tiles == b.system.tiles);
  CHECK(a.system.glues == b.system.glues);
}
