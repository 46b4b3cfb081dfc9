#include "tilekit/tiles_io.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <optional>

#include "tilekit/error.hpp"

namespace tilekit {

namespace {

std::string format_number(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool done() {
    skip_space_and_comments();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Spaces and tabs only; stops at newline.
  void skip_inline_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  // Next character without skipping anything.
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  char peek() {
    skip_space_and_comments();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // A key is a run of words separated by single spaces, e.g. "num tile types".
  std::string key() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        out += c;
        ++pos_;
      } else if ((c == ' ' || c == '\t') && !out.empty()) {
        std::size_t look = pos_;
        while (look < text_.size() && (text_[look] == ' ' || text_[look] == '\t')) ++look;
        if (look < text_.size() && std::isalpha(static_cast<unsigned char>(text_[look]))) {
          out += ' ';
          pos_ = look;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    if (out.empty()) fail("expected a keyword");
    return out;
  }

  long integer() {
    skip_space_and_comments();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || value < 0) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  double number() {
    skip_space_and_comments();
    double value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc{} || !(value > 0)) fail("expected a positive number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  // Text of a `%` comment that follows on the current line, if any.
  std::optional<std::string> trailing_comment() {
    skip_inline_space();
    if (pos_ >= text_.size() || text_[pos_] != '%') return std::nullopt;
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
    std::string_view body = text_.substr(start, pos_ - start);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    return std::string(body);
  }

  void skip_to_line_end() {
    while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, "line " + std::to_string(line_) + ": " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

std::string emit_tiles(const TileSystem& system) {
  const GlueId bindings = system.glues.size();
  std::string out;
  out += "tile edges matches {{N E S W}*}\n";
  out += "num tile types=" + std::to_string(system.tiles.size()) + "\n";
  out += "num binding types=" + std::to_string(bindings) + "\n";
  out += "tile edges={\n";
  for (std::size_t i = 0; i < system.tiles.size(); ++i) {
    const Tile& t = system.tiles[i];
    for (Side s : kSides) {
      if (t.glue(s) > bindings) {
        throw Error(Errc::InvariantViolation, "tile " + std::to_string(i + 1) + " uses glue " +
                                                  std::to_string(t.glue(s)) + " > " +
                                                  std::to_string(bindings));
      }
    }
    out += '{' + std::to_string(t.north) + ' ' + std::to_string(t.east) + ' ' +
           std::to_string(t.south) + ' ' + std::to_string(t.west) + '}';
    if (t.stoichiometry != 1.0) out += '[' + format_number(t.stoichiometry) + ']';
    if (!t.label.empty()) {
      std::string label = t.label;
      for (char& c : label) {
        if (c == '\n' || c == '\r') c = ' ';
      }
      out += "    % " + label;
    }
    out += '\n';
  }
  out += "}\n";
  out += "binding strengths={";
  for (GlueId g = 1; g <= bindings; ++g) {
    if (g > 1) out += ' ';
    out += std::to_string(system.glues.strength(g));
  }
  out += "}\n";
  return out;
}

TileSystem parse_tiles(std::string_view text) {
  Reader in(text);
  std::optional<long> tile_count, binding_count;
  std::optional<std::vector<Tile>> tiles;
  std::optional<std::vector<int>> strengths;

  while (!in.done()) {
    const int key_line = in.line();
    const std::string key = in.key();
    if (key == "tile edges matches") {
      in.skip_to_line_end();
      continue;
    }
    in.expect('=');
    if (key == "num tile types") {
      if (tile_count) in.fail("'num tile types' given twice");
      tile_count = in.integer();
    } else if (key == "num binding types") {
      if (binding_count) in.fail("'num binding types' given twice");
      binding_count = in.integer();
    } else if (key == "tile edges") {
      if (tiles) in.fail("'tile edges' given twice");
      tiles.emplace();
      in.expect('{');
      while (in.peek() != '}') {
        if (in.peek() == '\0') in.fail("unterminated tile list");
        in.expect('{');
        std::array<GlueId, 4> edges{};
        for (GlueId& e : edges) e = static_cast<GlueId>(in.integer());
        in.expect('}');
        Tile t{edges[0], edges[1], edges[2], edges[3], {}, 1.0};
        in.skip_inline_space();
        if (in.at('[')) {
          in.expect('[');
          t.stoichiometry = in.number();
          in.expect(']');
          in.skip_inline_space();
        }
        if (auto label = in.trailing_comment()) t.label = std::move(*label);
        tiles->push_back(std::move(t));
      }
      in.expect('}');
    } else if (key == "binding strengths") {
      if (strengths) in.fail("'binding strengths' given twice");
      strengths.emplace();
      in.expect('{');
      while (in.peek() != '}') {
        if (in.peek() == '\0') in.fail("unterminated strength list");
        strengths->push_back(static_cast<int>(in.integer()));
      }
      in.expect('}');
    } else {
      throw Error(Errc::SyntaxError,
                  "line " + std::to_string(key_line) + ": unknown key '" + key + "'");
    }
  }

  if (!tile_count) throw Error(Errc::SyntaxError, "missing 'num tile types'");
  if (!binding_count) throw Error(Errc::SyntaxError, "missing 'num binding types'");
  if (!tiles) throw Error(Errc::SyntaxError, "missing 'tile edges'");
  if (!strengths) throw Error(Errc::SyntaxError, "missing 'binding strengths'");

  if (static_cast<std::size_t>(*tile_count) != tiles->size()) {
    throw Error(Errc::CountMismatch, "num tile types=" + std::to_string(*tile_count) + " but " +
                                         std::to_string(tiles->size()) + " tiles are listed");
  }
  if (static_cast<std::size_t>(*binding_count) != strengths->size()) {
    throw Error(Errc::CountMismatch, "num binding types=" + std::to_string(*binding_count) +
                                         " but " + std::to_string(strengths->size()) +
                                         " strengths are listed");
  }

  TileSystem system;
  for (int s : *strengths) system.glues.fresh(s);
  for (const Tile& t : *tiles) {
    for (Side s : kSides) {
      if (t.glue(s) > static_cast<GlueId>(*binding_count)) {
        throw Error(Errc::UnknownGlue, "glue " + std::to_string(t.glue(s)) + " exceeds " +
                                           std::to_string(*binding_count) + " binding types");
      }
    }
  }
  system.tiles = std::move(*tiles);
  return system;
}

std::string emit_document(const TilesDocument& document) {
  std::string out;
  for (const std::string& c : document.comments) out += "% " + c + "\n";
  out += emit_tiles(document.system);
  return out;
}

TilesDocument parse_document(std::string_view text) {
  TilesDocument doc;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (line.empty() || line.front() != '%') break;
    line.remove_prefix(1);
    if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    doc.comments.emplace_back(line);
    start = end + 1;
  }
  doc.system = parse_tiles(text);
  return doc;
}

}  // namespace tilekit
