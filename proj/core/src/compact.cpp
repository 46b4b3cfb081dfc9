#include "tilekit/compact.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "tilekit/error.hpp"

namespace tilekit {

namespace {

constexpr Offset kSelf{0, 0};

std::string tuple_bits(const std::vector<Value>& values, int bits) {
  std::string out;
  for (Value v : values) out += format_value(v, bits);
  return out;
}

std::string tuple_text(const std::vector<Value>& values, int bits) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ',';
    out += format_value(values[k], bits);
  }
  return out;
}

// Values of one tile type: one per neighborhood offset plus its own value.
struct TileType {
  std::map<Offset, Value> values;

  Value at(Offset o) const { return values.at(o); }
  std::vector<Value> pad(const std::vector<Offset>& offsets) const {
    std::vector<Value> out;
    out.reserve(offsets.size());
    for (Offset o : offsets) out.push_back(at(o));
    return out;
  }
};

std::vector<TileType> enumerate_types(const PadWindow& window, const ValueRule& rule) {
  const auto nb = window.neighborhood();
  const int bits = rule.bits();
  const std::size_t total_bits = nb.size() * static_cast<std::size_t>(bits);
  if (total_bits > 16) {
    throw Error(Errc::WidthOverflow, "compact neighborhood needs 2^" + std::to_string(total_bits) +
                                         " tile types, above the cap of 2^16");
  }
  const Value mask = (Value{1} << bits) - 1;
  std::vector<TileType> types;
  types.reserve(std::size_t{1} << total_bits);
  for (std::size_t index = 0; index < (std::size_t{1} << total_bits); ++index) {
    TileType t;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      const std::size_t shift = (nb.size() - 1 - k) * static_cast<std::size_t>(bits);
      t.values[nb[k]] = static_cast<Value>((index >> shift) & mask);
    }
    t.values[kSelf] = rule(t.at({0, -1}), t.at({-1, 0}));
    types.push_back(std::move(t));
  }
  return types;
}

void check_frames(const CompactDesign& design, int bits) {
  if (design.hframe.empty() || design.vframe.empty()) {
    throw Error(Errc::InvalidArgument, "horizontal and vertical frame values must be non-empty");
  }
  const Value limit = Value{1} << bits;
  for (const auto* frame : {&design.hframe, &design.vframe}) {
    for (Value v : *frame) {
      if (v >= limit) {
        throw Error(Errc::InvalidArgument, "frame value " + std::to_string(v) + " does not fit in " +
                                               std::to_string(bits) + " bits");
      }
    }
  }
}

// Frame values padded outward: negative indices clamp onto the frame itself.
class FrameValues {
 public:
  explicit FrameValues(const CompactDesign& d) : h_(d.hframe), v_(d.vframe) {}

  Value at(int i, int j) const {
    i = std::max(i, 0);
    j = std::max(j, 0);
    if (i == 0 && j == 0) return h_.front();
    if (i == 0) return h_[static_cast<std::size_t>(j - 1) % h_.size()];
    if (j == 0) return v_[static_cast<std::size_t>(i - 1) % v_.size()];
    throw Error(Errc::InvalidArgument, "not a frame position");
  }

 private:
  const std::vector<Value>& h_;
  const std::vector<Value>& v_;
};

}  // namespace

std::vector<Offset> PadWindow::west() const {
  std::vector<Offset> out;
  for (Offset o : east) out.push_back({o.row, o.col + 1});
  return out;
}

std::vector<Offset> PadWindow::north() const {
  std::vector<Offset> out;
  for (Offset o : south) out.push_back({o.row + 1, o.col});
  return out;
}

std::vector<Offset> PadWindow::neighborhood() const {
  std::vector<Offset> out;
  for (const auto* side : {&east, &south}) {
    for (Offset o : *side) {
      if (std::find(out.begin(), out.end(), o) == out.end()) out.push_back(o);
    }
  }
  return out;
}

PadWindow pad_window(int way) {
  switch (way) {
    case 1: return PadWindow{1, {{0, -1}}, {{-1, 0}}};
    case 2: return PadWindow{2, {{0, -1}, {-1, -1}}, {{-1, 0}, {-1, -1}}};
    case 3: return PadWindow{3, {{0, -1}, {-1, -1}, {0, -2}}, {{-1, 0}, {-1, -1}, {-2, 0}}};
    default:
      throw Error(Errc::UnsupportedWay,
                  "compact scheme supports 2-way and 3-way, got " + std::to_string(way));
  }
}

ValueRule::ValueRule(const TileDesign& design) {
  std::vector<std::string> north, west;
  for (const Expr& e : design.north) north.push_back(to_string(e));
  for (const Expr& e : design.west) west.push_back(to_string(e));
  if (north != west) {
    throw Error(Errc::NorthWestMismatch,
                "compact designs need identical north and west outputs (the tile value)");
  }
  const std::size_t b = design.north.size();
  if (design.east.size() != b || design.south.size() != b) {
    throw Error(Errc::WidthMismatch, "compact designs need east, south and north widths equal; got " +
                                         std::to_string(design.east.size()) + ", " +
                                         std::to_string(design.south.size()) + ", " +
                                         std::to_string(b));
  }
  if (b < 1 || b > 8) throw Error(Errc::WidthOverflow, "tile value width must be 1..8 bits");
  bits_ = static_cast<int>(b);
  const std::size_t n = std::size_t{1} << b;
  table_.resize(n * n);
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t s = 0; s < n; ++s) {
      Env env;
      for (std::size_t k = 0; k < b; ++k) {
        env[design.east[k]] = (e >> (b - 1 - k)) & 1U;
        env[design.south[k]] = (s >> (b - 1 - k)) & 1U;
      }
      Value v = 0;
      for (const Expr& out : design.north) v = (v << 1) | (eval_expr(out, env) ? 1U : 0U);
      table_[(e << b) | s] = v;
    }
  }
}

CompactResult compact_transform(const CompactDesign& design) {
  const PadWindow window = pad_window(design.way);
  if (design.way == 1) {
    throw Error(Errc::UnsupportedWay, "compact scheme supports 2-way and 3-way, got 1");
  }
  const ValueRule rule(design.base);
  const int bits = rule.bits();
  check_frames(design, bits);

  CompactResult out;
  out.codec.way = design.way;
  out.codec.bits = bits;
  GlueTable& glues = out.system.glues;
  auto pad_glue = [&](Axis axis, const std::vector<Value>& tuple) {
    const GlueId id = glues.allocate(axis, tuple_bits(tuple, bits), 1);
    out.codec.pads.try_emplace(id, axis, tuple);
    return id;
  };

  const auto west = window.west();
  const auto north = window.north();
  for (const TileType& t : enumerate_types(window, rule)) {
    Tile tile;
    tile.north = pad_glue(Axis::NS, t.pad(north));
    tile.east = pad_glue(Axis::EW, t.pad(window.east));
    tile.south = pad_glue(Axis::NS, t.pad(window.south));
    tile.west = pad_glue(Axis::EW, t.pad(west));
    tile.label = "e=" + tuple_text(t.pad(window.east), bits) + " s=" +
                 tuple_text(t.pad(window.south), bits) + " v=" + format_value(t.at(kSelf), bits);
    out.system.tiles.push_back(std::move(tile));
  }
  out.rule_tiles = out.system.tiles.size();

  const FrameValues frame(design);
  const int row_len = static_cast<int>(design.hframe.size());
  const int col_len = static_cast<int>(design.vframe.size());
  std::map<std::string, GlueId> chain;
  auto chain_glue = [&](const std::string& name) {
    auto [it, fresh] = chain.try_emplace(name, kNullGlue);
    if (fresh) it->second = glues.fresh(2, name);
    return it->second;
  };
  auto frame_pad = [&](int i, int j, const std::vector<Offset>& offsets) {
    std::vector<Value> tuple;
    for (Offset o : offsets) tuple.push_back(frame.at(i + o.row, j + o.col));
    return tuple;
  };

  out.seed = out.system.tiles.size();
  Tile corner;
  corner.north = chain_glue("vframe 1");
  corner.west = chain_glue("hframe 1");
  corner.label = "corner v=" + format_value(frame.at(0, 0), bits);
  out.system.tiles.push_back(std::move(corner));

  for (int j = 1; j <= row_len; ++j) {
    Tile t;
    t.north = pad_glue(Axis::NS, frame_pad(0, j, north));
    t.east = chain_glue("hframe " + std::to_string(j));
    t.west = j < row_len ? chain_glue("hframe " + std::to_string(j + 1)) : kNullGlue;
    t.label = "hframe " + std::to_string(j) + " v=" + format_value(frame.at(0, j), bits);
    out.system.tiles.push_back(std::move(t));
  }
  for (int i = 1; i <= col_len; ++i) {
    Tile t;
    t.north = i < col_len ? chain_glue("vframe " + std::to_string(i + 1)) : kNullGlue;
    t.south = chain_glue("vframe " + std::to_string(i));
    t.west = pad_glue(Axis::EW, frame_pad(i, 0, west));
    t.label = "vframe " + std::to_string(i) + " v=" + format_value(frame.at(i, 0), bits);
    out.system.tiles.push_back(std::move(t));
  }
  out.system.validate();
  return out;
}

std::vector<std::vector<Value>> value_grid(const CompactDesign& design, int n) {
  const ValueRule rule(design.base);
  check_frames(design, rule.bits());
  const FrameValues frame(design);
  std::vector<std::vector<Value>> v(n, std::vector<Value>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      v[i][j] = (i == 0 || j == 0) ? frame.at(i, j) : rule(v[i][j - 1], v[i - 1][j]);
    }
  }
  return v;
}

std::map<std::pair<int, int>, Value> decode_values(const SimReport& report,
                                                   const TileSystem& system,
                                                   const PadCodec& codec) {
  std::map<std::pair<int, int>, Value> out;
  const Pos seed = report.assembly.seed;
  for (const auto& [pos, placed] : report.assembly.cells) {
    const Tile& t = system.tiles.at(placed.tile);
    const std::pair<int, int> key{pos.y - seed.y, seed.x - pos.x};
    // The first component of a north or west pad is the tile's own value.
    if (auto it = codec.pads.find(t.north); it != codec.pads.end() && it->second.first == Axis::NS) {
      out[key] = it->second.second.front();
    } else if (auto w = codec.pads.find(t.west); w != codec.pads.end() && w->second.first == Axis::EW) {
      out[key] = w->second.second.front();
    }
  }
  return out;
}

namespace {

class ResilienceSearch {
 public:
  ResilienceSearch(const CompactDesign& design, int n)
      : n_(n), window_(pad_window(design.way)), rule_(design.base), frame_(design) {
    check_frames(design, rule_.bits());
    values_ = value_grid(design, n);
    types_ = enumerate_types(window_, rule_);
    west_ = window_.west();
    north_ = window_.north();
    for (const TileType& t : types_) {
      east_pad_.push_back(t.pad(window_.east));
      south_pad_.push_back(t.pad(window_.south));
      west_pad_.push_back(t.pad(west_));
      north_pad_.push_back(t.pad(north_));
    }
  }

  int run() {
    int overall = std::numeric_limits<int>::max();
    for (int i = 1; i <= n_ - 3; ++i) {
      for (int j = 1; j <= n_ - 3; ++j) {
        overall = std::min(overall, from_site(i, j));
      }
    }
    return overall;
  }

 private:
  // Correct pads emitted by the tile at (i, j), frame or rule site.
  std::vector<Value> true_pad(int i, int j, const std::vector<Offset>& offsets) const {
    std::vector<Value> out;
    for (Offset o : offsets) {
      const int r = i + o.row;
      const int c = j + o.col;
      out.push_back((r <= 0 || c <= 0) ? frame_.at(r, c) : values_[r][c]);
    }
    return out;
  }

  const std::vector<Value>& west_of(int i, int j) {
    if (j == 0 || assigned_[i][j] < 0) {
      scratch_w_ = true_pad(i, j, west_);
      return scratch_w_;
    }
    return west_pad_[assigned_[i][j]];
  }

  const std::vector<Value>& north_of(int i, int j) {
    if (i == 0 || assigned_[i][j] < 0) {
      scratch_n_ = true_pad(i, j, north_);
      return scratch_n_;
    }
    return north_pad_[assigned_[i][j]];
  }

  int from_site(int i, int j) {
    assigned_.assign(n_, std::vector<int>(n_, -1));
    best_ = std::numeric_limits<int>::max();
    start_ = {i, j};
    search(i, j, 0);
    return best_;
  }

  void search(int i, int j, int cost) {
    if (cost >= best_) return;
    if (i == n_) {
      best_ = cost;
      return;
    }
    const int next_i = j + 1 == n_ ? i + 1 : i;
    const int next_j = j + 1 == n_ ? 1 : j + 1;

    const std::vector<Value> east_in = west_of(i, j - 1);
    const std::vector<Value> south_in = north_of(i - 1, j);
    const bool corrupt_here = std::pair{i, j} == start_;

    std::vector<std::pair<int, int>> options;  // (cost, type)
    for (std::size_t t = 0; t < types_.size(); ++t) {
      if (corrupt_here && types_[t].at(kSelf) == values_[i][j]) continue;
      const int c = (east_pad_[t] != east_in) + (south_pad_[t] != south_in);
      options.emplace_back(c, static_cast<int>(t));
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [c, t] : options) {
      if (cost + c >= best_) break;
      assigned_[i][j] = t;
      search(next_i, next_j, cost + c);
    }
    assigned_[i][j] = -1;
  }

  int n_;
  PadWindow window_;
  ValueRule rule_;
  FrameValues frame_;
  std::vector<std::vector<Value>> values_;
  std::vector<TileType> types_;
  std::vector<Offset> west_, north_;
  std::vector<std::vector<Value>> east_pad_, south_pad_, west_pad_, north_pad_;
  std::vector<std::vector<int>> assigned_;
  std::vector<Value> scratch_w_, scratch_n_;
  std::pair<int, int> start_{0, 0};
  int best_ = 0;
};

}  // namespace

int resilience_analysis(const CompactDesign& design, int n) {
  if (n < 4) throw Error(Errc::InvalidArgument, "resilience grid must be at least 4x4");
  return ResilienceSearch(design, n).run();
}

std::string format_value(Value v, int bits) {
  std::string out(static_cast<std::size_t>(bits), '0');
  for (int k = 0; k < bits; ++k) {
    if ((v >> (bits - 1 - k)) & 1U) out[static_cast<std::size_t>(k)] = '1';
  }
  return out;
}

std::vector<Value> parse_frame_values(std::string_view text, int bits) {
  std::vector<std::string_view> groups;
  if (bits == 1 && text.find(',') == std::string_view::npos) {
    for (std::size_t k = 0; k < text.size(); ++k) groups.push_back(text.substr(k, 1));
  } else {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      groups.push_back(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  if (text.empty()) throw Error(Errc::ParseError, "frame value list is empty");
  std::vector<Value> out;
  for (std::string_view g : groups) {
    if (g.size() != static_cast<std::size_t>(bits) ||
        g.find_first_not_of("01") != std::string_view::npos) {
      throw Error(Errc::ParseError, "frame value '" + std::string(g) + "' is not a " +
                                        std::to_string(bits) + "-bit binary string");
    }
    Value v = 0;
    for (char c : g) v = (v << 1) | (c == '1' ? 1U : 0U);
    out.push_back(v);
  }
  return out;
}

std::string emit_codec(const PadCodec& codec) {
  std::string out = "% compact way=" + std::to_string(codec.way) + " bits=" +
                    std::to_string(codec.bits) + "\n";
  for (const auto& [glue, pad] : codec.pads) {
    out += std::to_string(glue) + ' ' + std::string(to_string(pad.first));
    for (Value v : pad.second) out += ' ' + format_value(v, codec.bits);
    out += '\n';
  }
  return out;
}

PadCodec parse_codec(std::string_view text) {
  PadCodec codec;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.front() == '%') {
      std::istringstream header(line.substr(1));
      std::string word;
      while (header >> word) {
        if (word.rfind("way=", 0) == 0) codec.way = std::stoi(word.substr(4));
        if (word.rfind("bits=", 0) == 0) codec.bits = std::stoi(word.substr(5));
      }
      continue;
    }
    std::istringstream fields(line);
    GlueId glue = 0;
    std::string axis;
    if (!(fields >> glue)) continue;
    if (!(fields >> axis) || (axis != "NS" && axis != "EW")) {
      throw Error(Errc::SyntaxError, "codec line " + std::to_string(line_no) + ": expected axis");
    }
    std::vector<Value> tuple;
    std::string v;
    while (fields >> v) tuple.push_back(parse_frame_values(v, codec.bits).front());
    if (tuple.empty()) {
      throw Error(Errc::SyntaxError, "codec line " + std::to_string(line_no) + ": empty pad tuple");
    }
    codec.pads.emplace(glue, std::pair{axis == "NS" ? Axis::NS : Axis::EW, std::move(tuple)});
  }
  return codec;
}

}  // namespace tilekit
