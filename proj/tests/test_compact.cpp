#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "support.hpp"
#include "tilekit/compact.hpp"
#include "tilekit/error.hpp"
#include "tilekit/sim.hpp"

using namespace tilekit;

namespace {

// Independent pad definitions, written straight from the tuple formulas.
// v(di, dj) reads V(i + di, j + dj) around the tile at (i, j).
using Look = std::function<int(int, int)>;

std::vector<int> pad_e(int way, const Look& v) {
  if (way == 1) return {v(0, -1)};
  if (way == 2) return {v(0, -1), v(-1, -1)};
  return {v(0, -1), v(-1, -1), v(0, -2)};
}
std::vector<int> pad_s(int way, const Look& v) {
  if (way == 1) return {v(-1, 0)};
  if (way == 2) return {v(-1, 0), v(-1, -1)};
  return {v(-1, 0), v(-1, -1), v(-2, 0)};
}
std::vector<int> pad_w(int way, const Look& v) {
  if (way == 1) return {v(0, 0)};
  if (way == 2) return {v(0, 0), v(-1, 0)};
  return {v(0, 0), v(-1, 0), v(0, -1)};
}
std::vector<int> pad_n(int way, const Look& v) {
  if (way == 1) return {v(0, 0)};
  if (way == 2) return {v(0, 0), v(0, -1)};
  return {v(0, 0), v(0, -1), v(-1, 0)};
}

// Brute-force minimum mismatch count for the XOR rule with all-ones frames.
class XorResilienceOracle {
 public:
  XorResilienceOracle(int way, int n) : way_(way), n_(n) {
    std::vector<std::pair<int, int>> free = {{0, -1}, {-1, 0}};
    if (way >= 2) free.push_back({-1, -1});
    if (way == 3) {
      free.push_back({0, -2});
      free.push_back({-2, 0});
    }
    for (int mask = 0; mask < (1 << free.size()); ++mask) {
      std::map<std::pair<int, int>, int> t;
      for (std::size_t k = 0; k < free.size(); ++k) t[free[k]] = (mask >> k) & 1;
      t[{0, 0}] = t[{0, -1}] ^ t[{-1, 0}];
      const Look v = [&t](int di, int dj) { return t.at({di, dj}); };
      types_.push_back({t[{0, 0}], pad_e(way, v), pad_s(way, v), pad_w(way, v), pad_n(way, v)});
    }
  }

  int minimum() {
    int best = std::numeric_limits<int>::max();
    for (int i = 1; i <= n_ - 3; ++i) {
      for (int j = 1; j <= n_ - 3; ++j) {
        corrupt_ = {i, j};
        grid_.assign(n_, std::vector<int>(n_, -1));
        bound_ = std::numeric_limits<int>::max();
        dfs(1, 1, 0);
        best = std::min(best, bound_);
      }
    }
    return best;
  }

 private:
  struct Type {
    int value;
    std::vector<int> e, s, w, n;
  };

  static int truth(int i, int j) { return oracle::pascal_mod2(std::max(i, 0), std::max(j, 0)); }

  Look true_look(int i, int j) const {
    return [i, j](int di, int dj) { return truth(i + di, j + dj); };
  }

  std::vector<int> west_out(int i, int j) const {
    if (j == 0 || grid_[i][j] < 0) return pad_w(way_, true_look(i, j));
    return types_[grid_[i][j]].w;
  }
  std::vector<int> north_out(int i, int j) const {
    if (i == 0 || grid_[i][j] < 0) return pad_n(way_, true_look(i, j));
    return types_[grid_[i][j]].n;
  }

  void dfs(int i, int j, int cost) {
    if (cost >= bound_) return;
    if (i == n_) {
      bound_ = cost;
      return;
    }
    const bool before = std::pair{i, j} < corrupt_;
    const int ni = j == n_ - 1 ? i + 1 : i;
    const int nj = j == n_ - 1 ? 1 : j + 1;
    if (before) {  // correct tile, and it matches its correct neighbours
      dfs(ni, nj, cost);
      return;
    }
    const auto e_in = west_out(i, j - 1);
    const auto s_in = north_out(i - 1, j);
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (std::pair{i, j} == corrupt_ && types_[t].value == truth(i, j)) continue;
      grid_[i][j] = static_cast<int>(t);
      dfs(ni, nj, cost + (types_[t].e != e_in) + (types_[t].s != s_in));
    }
    grid_[i][j] = -1;
  }

  int way_;
  int n_;
  std::vector<Type> types_;
  std::vector<std::vector<int>> grid_;
  std::pair<int, int> corrupt_;
  int bound_ = 0;
};

CompactDesign xor_design(int way, std::vector<Value> h = {1}, std::vector<Value> v = {1}) {
  return {parse_design(fixtures::read("xor.design")), way, std::move(h), std::move(v)};
}

std::vector<std::pair<int, int>> absolute(const std::vector<Offset>& window, int i, int j) {
  std::vector<std::pair<int, int>> out;
  for (Offset o : window) out.push_back({i + o.row, j + o.col});
  return out;
}

std::vector<std::pair<int, int>> positions(const std::function<std::vector<int>(const Look&)>& pad,
                                           int i, int j) {
  // Evaluate the formula with a lookup that encodes positions as numbers.
  const auto enc = pad([i, j](int di, int dj) { return (i + di + 10) * 100 + (j + dj + 10); });
  std::vector<std::pair<int, int>> out;
  for (int code : enc) out.push_back({code / 100 - 10, code % 100 - 10});
  return out;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Io;
}

SimReport grow(const CompactResult& r, int n) {
  SimOptions o;
  o.seed = r.seed;
  o.box = Box::north_west(n, n);
  return simulate(r.system, o);
}

}  // namespace

TEST_CASE("computational tile counts") {
  CHECK(compact_transform(xor_design(2)).rule_tiles == 8);
  CHECK(compact_transform(xor_design(3)).rule_tiles == 32);
  // Oracle: one tile per neighbourhood assignment, 2^(3b) and 2^(5b).
  for (int way : {2, 3}) {
    const std::size_t nb = way == 2 ? 3 : 5;
    CHECK(compact_transform(xor_design(way)).rule_tiles == (std::size_t{1} << nb));
  }
}

TEST_CASE("pad windows match the tuple formulas") {
  for (int way : {1, 2, 3}) {
    CAPTURE(way);
    const PadWindow w = pad_window(way);
    const int i = 5, j = 7;
    CHECK(absolute(w.east, i, j) == positions([way](const Look& v) { return pad_e(way, v); }, i, j));
    CHECK(absolute(w.south, i, j) == positions([way](const Look& v) { return pad_s(way, v); }, i, j));
    CHECK(absolute(w.west(), i, j) == positions([way](const Look& v) { return pad_w(way, v); }, i, j));
    CHECK(absolute(w.north(), i, j) == positions([way](const Look& v) { return pad_n(way, v); }, i, j));
  }
}

TEST_CASE("closure: output pads equal the neighbour's input pads") {
  for (int way : {2, 3}) {
    for (int i = 2; i < 6; ++i) {
      for (int j = 2; j < 6; ++j) {
        CHECK(positions([way](const Look& v) { return pad_w(way, v); }, i, j) ==
              positions([way](const Look& v) { return pad_e(way, v); }, i, j + 1));
        CHECK(positions([way](const Look& v) { return pad_n(way, v); }, i, j) ==
              positions([way](const Look& v) { return pad_s(way, v); }, i + 1, j));
      }
    }
  }
}

TEST_CASE("every growth site has exactly one compact tile") {
  for (int way : {2, 3}) {
    const CompactResult r = compact_transform(xor_design(way));
    std::set<std::pair<GlueId, GlueId>> inputs;
    for (std::size_t t = 0; t < r.rule_tiles; ++t) {
      const Tile& tile = r.system.tiles[t];
      CHECK(inputs.insert({tile.east, tile.south}).second);
      CHECK(r.system.glues.strength(tile.east) == 1);
      CHECK(r.system.glues.strength(tile.south) == 1);
    }
  }
}

TEST_CASE("decoded simulation equals the base computation on 8x8") {
  for (int way : {2, 3}) {
    CAPTURE(way);
    const CompactDesign cd = xor_design(way, std::vector<Value>(8, 1), std::vector<Value>(8, 1));
    const CompactResult r = compact_transform(cd);
    const SimReport rep = grow(r, 9);
    CHECK(rep.nondeterministic.empty());
    CHECK(rep.mismatches.empty());
    const auto decoded = decode_values(rep, r.system, r.codec);
    for (int i = 1; i <= 8; ++i) {
      for (int j = 1; j <= 8; ++j) {
        REQUIRE(decoded.contains({i, j}));
        CHECK(decoded.at({i, j}) == static_cast<Value>(oracle::pascal_mod2(i, j)));
      }
    }
  }
}

TEST_CASE("random frames decode to an independent recomputation") {
  std::mt19937 rng(7);
  const TileDesign two_bit =
      parse_design("east: a, b\nsouth: c, d\nnorth: a xor c, b and not d\nwest: a xor c, b and not d");
  for (int trial = 0; trial < 6; ++trial) {
    const int way = 2 + trial % 2;
    const bool wide = trial >= 2 && way == 2;
    const int bits = wide ? 2 : 1;
    std::vector<Value> h(7), v(7);
    for (auto& x : h) x = rng() % (1U << bits);
    for (auto& x : v) x = rng() % (1U << bits);
    CompactDesign cd = wide ? CompactDesign{two_bit, way, h, v} : xor_design(way, h, v);
    const CompactResult r = compact_transform(cd);
    const SimReport rep = grow(r, 8);
    CHECK(rep.nondeterministic.empty());
    CHECK(rep.mismatches.empty());
    // Recompute with the design's own expressions.
    std::vector<std::vector<Value>> want(8, std::vector<Value>(8));
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) {
        if (i == 0) {
          want[i][j] = j == 0 ? h[0] : h[j - 1];
        } else if (j == 0) {
          want[i][j] = v[i - 1];
        } else if (!wide) {
          want[i][j] = want[i][j - 1] ^ want[i - 1][j];
        } else {
          const Value e = want[i][j - 1], s = want[i - 1][j];
          const Value hi = ((e >> 1) ^ (s >> 1)) & 1;
          const Value lo = (e & 1) & ~(s & 1) & 1;
          want[i][j] = (hi << 1) | lo;
        }
      }
    }
    CHECK(value_grid(cd, 8) == want);
    const auto decoded = decode_values(rep, r.system, r.codec);
    for (int i = 1; i < 8; ++i) {
      for (int j = 1; j < 8; ++j) CHECK(decoded.at({i, j}) == want[i][j]);
    }
  }
}

TEST_CASE("resilience agrees with the brute-force oracle") {
  for (int way : {1, 2, 3}) {
    CAPTURE(way);
    XorResilienceOracle oracle(way, 6);
    CHECK(resilience_analysis(xor_design(way), 6) == oracle.minimum());
  }
}

TEST_CASE("resilience values on a 6x6 grid") {
  CHECK(resilience_analysis(xor_design(1), 6) == 1);
  CHECK(resilience_analysis(xor_design(2), 6) == 2);
  CHECK(resilience_analysis(xor_design(3), 6) == 2);
}

TEST_CASE("two-way redundancy on larger grids") {
  for (int n : {5, 7}) CHECK(resilience_analysis(xor_design(2), n) >= 2);
}

TEST_CASE("resilience needs n >= 4") {
  CHECK(code_of([] { resilience_analysis(xor_design(2), 3); }) == Errc::InvalidArgument);
}

TEST_CASE("compact errors") {
  CompactDesign bad = xor_design(2);
  bad.base = parse_design("east: e1\nsouth: s1\nnorth: e1 xor s1\nwest: e1 and s1");
  CHECK(code_of([&] { compact_transform(bad); }) == Errc::NorthWestMismatch);
  for (int way : {0, 1, 4}) {
    CHECK(code_of([&] { compact_transform(xor_design(way)); }) == Errc::UnsupportedWay);
  }
  CompactDesign wide = xor_design(2);
  wide.base = parse_design("east: a, b\nsouth: c\nnorth: a, c\nwest: a, c");
  CHECK(code_of([&] { compact_transform(wide); }) == Errc::WidthMismatch);
  CHECK(code_of([] { compact_transform(xor_design(2, {}, {1})); }) == Errc::InvalidArgument);
  CHECK(code_of([] { compact_transform(xor_design(2, {2}, {1})); }) == Errc::InvalidArgument);
}

TEST_CASE("frame values") {
  CHECK(parse_frame_values("1011", 1) == std::vector<Value>{1, 0, 1, 1});
  CHECK(parse_frame_values("1,0", 1) == std::vector<Value>{1, 0});
  CHECK(parse_frame_values("01,11,10", 2) == std::vector<Value>{1, 3, 2});
  CHECK(code_of([] { parse_frame_values("", 1); }) == Errc::ParseError);
  CHECK(code_of([] { parse_frame_values("012", 1); }) == Errc::ParseError);
  CHECK(code_of([] { parse_frame_values("011", 2); }) == Errc::ParseError);
  CHECK(code_of([] { parse_frame_values("01,", 2); }) == Errc::ParseError);
  CHECK(format_value(2, 3) == "010");
}

TEST_CASE("frame tiles") {
  const CompactResult r = compact_transform(xor_design(2, {1, 0, 1}, {0, 1}));
  CHECK(r.system.tiles.size() == 8 + 1 + 3 + 2);
  CHECK(r.seed == 8);
  const Tile& corner = r.system.tiles[r.seed];
  CHECK(corner.east == kNullGlue);
  CHECK(corner.south == kNullGlue);
  CHECK(r.system.glues.strength(corner.north) == 2);
  CHECK(r.system.glues.strength(corner.west) == 2);
  for (std::size_t t = r.seed + 1; t < r.system.tiles.size(); ++t) {
    const Tile& f = r.system.tiles[t];
    const bool row = t < r.seed + 4;
    const GlueId pad = row ? f.north : f.west;
    REQUIRE(r.codec.pads.contains(pad));
    CHECK(r.codec.pads.at(pad).first == (row ? Axis::NS : Axis::EW));
  }
  // Row tile j = 2 carries V(0,2) = 0 and V(0,1) = 1 on its north pad.
  CHECK(r.codec.pads.at(r.system.tiles[r.seed + 2].north).second == std::vector<Value>{0, 1});
}

TEST_CASE("codec text round trip") {
  const CompactResult r = compact_transform(xor_design(3));
  const std::string text = emit_codec(r.codec);
  CHECK(text.rfind("% compact way=3 bits=1\n", 0) == 0);
  const PadCodec back = parse_codec(text);
  CHECK(back.way == 3);
  CHECK(back.bits == 1);
  CHECK(back.pads == r.codec.pads);
}

TEST_CASE("compact output is deterministic") {
  const CompactResult a = compact_transform(xor_design(3, {1, 1, 0}, {1, 0}));
  const CompactResult b = compact_transform(xor_design(3, {1, 1, 0}, {1, 0}));
  CHECK(a.system.tiles == b.system.tiles);
  CHECK(a.system.glues == b.system.glues);
}
