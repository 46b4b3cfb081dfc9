#include "tilekit/design.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

#include "tilekit/error.hpp"

namespace tilekit {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string at_line(int line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string> parse_inputs(std::string_view text, int line, int column_offset) {
  // Inputs share the expression lexer so positions and identifier rules match.
  std::vector<std::string> names;
  for (const Expr& e : parse_expr_list(text, line, column_offset)) {
    if (e.op != Expr::Op::Var) {
      throw Error(Errc::SyntaxError,
                  at_line(line) + "input faces list variable names, got '" + to_string(e) + "'");
    }
    names.push_back(e.name);
  }
  return names;
}

}  // namespace

TileDesign parse_design(std::string_view text) {
  static constexpr std::array<std::string_view, 4> kFaces = {"east", "south", "north", "west"};
  struct Entry {
    std::string_view body;
    int line;
    int column;
  };
  std::map<std::string, Entry> faces;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!trim(line).empty()) {
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw Error(Errc::SyntaxError, at_line(line_no) + "expected 'face: entries'");
      }
      const std::string face = lower(trim(line.substr(0, colon)));
      if (std::find(kFaces.begin(), kFaces.end(), face) == kFaces.end()) {
        throw Error(Errc::SyntaxError, at_line(line_no) + "unknown face '" + face + "'");
      }
      if (faces.contains(face)) {
        throw Error(Errc::DuplicateFace, at_line(line_no) + "face '" + face + "' given twice");
      }
      faces.emplace(face, Entry{line.substr(colon + 1), line_no, static_cast<int>(colon + 1)});
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  for (std::string_view face : kFaces) {
    if (!faces.contains(std::string(face))) {
      throw Error(Errc::MissingFace, "face '" + std::string(face) + "' is missing");
    }
  }

  TileDesign design;
  const Entry& east = faces.at("east");
  const Entry& south = faces.at("south");
  const Entry& north = faces.at("north");
  const Entry& west = faces.at("west");
  design.east = parse_inputs(east.body, east.line, east.column);
  design.south = parse_inputs(south.body, south.line, south.column);
  design.north = parse_expr_list(north.body, north.line, north.column);
  design.west = parse_expr_list(west.body, west.line, west.column);

  std::set<std::string> declared;
  for (const auto& name : design.east) {
    if (!declared.insert(name).second) {
      throw Error(Errc::DuplicateVariable, "input '" + name + "' declared twice");
    }
  }
  for (const auto& name : design.south) {
    if (!declared.insert(name).second) {
      throw Error(Errc::DuplicateVariable, "input '" + name + "' declared twice");
    }
  }
  for (const auto* outputs : {&design.north, &design.west}) {
    for (const Expr& e : *outputs) {
      for (const auto& name : variables(e)) {
        if (!declared.contains(name)) {
          throw Error(Errc::UndeclaredVariable,
                      "'" + name + "' is not declared on the east or south face");
        }
      }
    }
  }

  if (design.north.size() != design.south.size()) {
    design.warnings.push_back("north width " + std::to_string(design.north.size()) +
                              " differs from south width " + std::to_string(design.south.size()));
  }
  if (design.east.size() != design.west.size()) {
    design.warnings.push_back("east width " + std::to_string(design.east.size()) +
                              " differs from west width " + std::to_string(design.west.size()));
  }
  return design;
}

std::string eval_outputs(const std::vector<Expr>& outputs, const Env& env) {
  std::string bits;
  bits.reserve(outputs.size());
  for (const Expr& e : outputs) bits += eval_expr(e, env) ? '1' : '0';
  return bits;
}

TileFragment enumerate_tiles(const TileDesign& design, GlueTable& table,
                             const EnumerateOptions& options) {
  const std::size_t k = design.east.size() + design.south.size();
  if (k >= 63 || (std::size_t{1} << k) > options.max_tiles) {
    throw Error(Errc::WidthOverflow, std::to_string(k) + " input bits need 2^" + std::to_string(k) +
                                         " tiles, above the cap of " +
                                         std::to_string(options.max_tiles));
  }
  TileFragment out;
  const std::size_t count = std::size_t{1} << k;
  out.tiles.reserve(count);
  std::map<std::tuple<GlueId, GlueId, GlueId, GlueId>, std::size_t> seen;

  for (std::size_t assignment = 0; assignment < count; ++assignment) {
    Env env;
    std::string east_bits, south_bits, label;
    for (std::size_t bit = 0; bit < k; ++bit) {
      const bool v = (assignment >> (k - 1 - bit)) & 1U;
      const bool is_east = bit < design.east.size();
      const std::string& name =
          is_east ? design.east[bit] : design.south[bit - design.east.size()];
      env[name] = v;
      (is_east ? east_bits : south_bits) += v ? '1' : '0';
      if (!label.empty()) label += ' ';
      label += name + '=' + (v ? '1' : '0');
    }
    Tile t;
    t.label = std::move(label);
    t.north = table.allocate(Axis::NS, eval_outputs(design.north, env), 1);
    t.east = table.allocate(Axis::EW, east_bits, 1);
    t.south = table.allocate(Axis::NS, south_bits, 1);
    t.west = table.allocate(Axis::EW, eval_outputs(design.west, env), 1);

    auto [it, fresh] = seen.emplace(std::tuple{t.north, t.east, t.south, t.west}, out.tiles.size());
    if (!fresh) {
      out.warnings.push_back("tile '" + t.label + "' has the same glues as tile '" +
                             out.tiles[it->second].label + "'");
    }
    out.tiles.push_back(std::move(t));
  }
  return out;
}

std::vector<Tile> make_frame_tiles(std::string_view spec, GlueTable& table, int default_strength) {
  if (default_strength < 1) {
    throw Error(Errc::InvalidArgument, "frame glue strength must be >= 1");
  }
  std::vector<std::string_view> groups;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = spec.find(';', start);
    groups.push_back(spec.substr(start, semi == std::string_view::npos ? spec.npos : semi - start));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }

  std::vector<Tile> tiles;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::string_view group = trim(groups[g]);
    if (group.empty()) {
      if (g + 1 == groups.size() && g > 0) {
        throw Error(Errc::TrailingSemicolon, "frame list must not end with ';'");
      }
      throw Error(Errc::ParseError, "frame tile " + std::to_string(g + 1) + " is empty");
    }
    std::vector<GlueId> glues;
    std::istringstream in{std::string(group)};
    std::string token;
    while (in >> token) {
      GlueId value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw Error(Errc::ParseError, "frame tile " + std::to_string(g + 1) + ": '" + token +
                                          "' is not a non-negative integer");
      }
      glues.push_back(value);
    }
    if (glues.size() != 4) {
      throw Error(Errc::ParseError, "frame tile " + std::to_string(g + 1) + " has " +
                                        std::to_string(glues.size()) +
                                        " glue numbers, expected 4 (n e s w)");
    }
    for (GlueId id : glues) {
      while (id > table.size()) table.fresh(default_strength);
    }
    Tile t;
    t.north = glues[0];
    t.east = glues[1];
    t.south = glues[2];
    t.west = glues[3];
    t.label = "frame " + std::to_string(g + 1);
    tiles.push_back(std::move(t));
  }
  return tiles;
}

std::string glue_table_report(const GlueTable& table) {
  std::string out = "glue  axis  bits  strength  label\n";
  for (const Glue& g : table.entries()) {
    out += std::to_string(g.number);
    out += "  ";
    out += g.meaning ? std::string(to_string(g.meaning->axis)) : "-";
    out += "  ";
    out += g.meaning ? g.meaning->bits : "-";
    out += "  ";
    out += std::to_string(g.strength);
    if (!g.label.empty()) {
      out += "  ";
      out += g.label;
    }
    out += '\n';
  }
  out += "next unused: " + std::to_string(table.next_unused()) + "\n";
  return out;
}

CompileResult compile_design(const TileDesign& design, std::string_view frames,
                             const CompileOptions& options) {
  CompileResult result;
  result.warnings = design.warnings;
  TileFragment rules = enumerate_tiles(design, result.system.glues, options.enumerate);
  result.rule_tiles = rules.tiles.size();
  result.warnings.insert(result.warnings.end(), rules.warnings.begin(), rules.warnings.end());
  result.system.tiles = std::move(rules.tiles);
  if (!trim(frames).empty()) {
    auto frame_tiles = make_frame_tiles(frames, result.system.glues, options.frame_strength);
    result.system.tiles.insert(result.system.tiles.end(), frame_tiles.begin(), frame_tiles.end());
  }
  for (const auto& [id, strength] : options.strength_overrides) {
    result.system.glues.set_strength(id, strength);
  }
  result.system.validate();
  return result;
}

}  // namespace tilekit
