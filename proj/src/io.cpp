#include "cheby/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "cheby/errors.hpp"

namespace cheby {

namespace {

std::pair<std::size_t, std::size_t> line_col_of_offset(const std::string& text,
                                                       std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void parse_fail_at(const std::string& text, std::size_t offset,
                                const std::string& what) {
  auto [line, col] = line_col_of_offset(text, offset);
  throw Error(ErrorCode::ParseError,
              what + " at line " + std::to_string(line) + ", column " + std::to_string(col));
}

// Best-effort position of a token for semantic errors in parsed JSON.
void parse_fail_token(const std::string& text, const std::string& token,
                      const std::string& what) {
  std::size_t pos = text.find(token);
  if (pos != std::string::npos) parse_fail_at(text, pos, what);
  throw Error(ErrorCode::ParseError, what);
}

}  // namespace

PointSet parse_points_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail_at(text, e.byte > 0 ? e.byte - 1 : 0, "invalid JSON");
  }
  if (!doc.is_array())
    throw Error(ErrorCode::ParseError, "points file must be a JSON array of [x, y] pairs");
  std::vector<Point> pts;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.size() != 2)
      throw Error(ErrorCode::ParseError, "each point must be a two-element array");
    Rational coords[2];
    for (int i = 0; i < 2; ++i) {
      const auto& v = entry[i];
      std::string raw;
      if (v.is_string())
        raw = v.get<std::string>();
      else if (v.is_number_integer())
        raw = std::to_string(v.get<long long>());
      else
        throw Error(ErrorCode::ParseError, "coordinates must be strings like \"p/q\"");
      try {
        coords[i] = parse_rational(raw);
      } catch (const Error&) {
        parse_fail_token(text, "\"" + raw + "\"", "malformed rational '" + raw + "'");
      }
    }
    pts.push_back(Point{coords[0], coords[1]});
  }
  return PointSet(std::move(pts));
}

std::string serialize_points_json(const PointSet& s) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& p : s.points()) doc.push_back({to_string(p.x), to_string(p.y)});
  return doc.dump(2) + "\n";
}

Triangle parse_triangle_csv(const std::string& text) {
  std::vector<Rational> sides;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) sides.push_back(parse_rational(item));
  if (sides.size() != 3)
    throw Error(ErrorCode::ParseError, "triangle needs exactly three sides, got '" + text + "'");
  return Triangle::from_sides(sides[0], sides[1], sides[2]);
}

namespace toml {

// Just enough TOML for the coloring files: bare keys, string/integer
// scalars and (nested) arrays, # comments. Newlines inside arrays are
// allowed, as in TOML proper.
struct Value {
  std::variant<std::string, std::int64_t, std::vector<Value>> data;

  bool is_string() const { return std::holds_alternative<std::string>(data); }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data); }
  bool is_array() const { return std::holds_alternative<std::vector<Value>>(data); }
  const std::string& str() const { return std::get<std::string>(data); }
  std::int64_t integer() const { return std::get<std::int64_t>(data); }
  const std::vector<Value>& array() const { return std::get<std::vector<Value>>(data); }
};

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  std::map<std::string, Value> parse() {
    std::map<std::string, Value> out;
    skip_space(true);
    while (pos_ < text_.size()) {
      std::string key = parse_key();
      skip_space(false);
      expect('=');
      skip_space(false);
      out[key] = parse_value();
      skip_space(true);
    }
    return out;
  }

private:
  void fail(const std::string& what) { parse_fail_at(text_, pos_, what); }

  void skip_space(bool newlines) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_key() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a key");
    return text_.substr(start, pos_ - start);
  }

  Value parse_value() {
    if (pos_ >= text_.size()) fail("expected a value");
    char c = text_[pos_];
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_int();
    fail("expected a string, integer or array");
    return {};
  }

  Value parse_string() {
    expect('"');
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) fail("unterminated string");
    std::string s = text_.substr(start, pos_ - start);
    ++pos_;
    return Value{s};
  }

  Value parse_int() {
    std::size_t start = pos_;
    if (text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (text_[start] == '-' && pos_ == start + 1)) fail("expected an integer");
    return Value{static_cast<std::int64_t>(std::stoll(text_.substr(start, pos_ - start)))};
  }

  Value parse_array() {
    expect('[');
    std::vector<Value> items;
    skip_space(true);
    if (pos_ < text_.size() && text_[pos_] == ']') {
      ++pos_;
      return Value{items};
    }
    while (true) {
      items.push_back(parse_value());
      skip_space(true);
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        skip_space(true);
        if (pos_ < text_.size() && text_[pos_] == ']') {  // trailing comma
          ++pos_;
          break;
        }
        continue;
      }
      expect(']');
      break;
    }
    return Value{items};
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

const Value& require(const std::map<std::string, Value>& table, const std::string& key) {
  auto it = table.find(key);
  if (it == table.end()) throw Error(ErrorCode::ParseError, "missing key '" + key + "'");
  return it->second;
}

std::vector<Rational> rational_array(const Value& v, const std::string& key) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "'" + key + "' must be an array");
  std::vector<Rational> out;
  for (const auto& item : v.array()) {
    if (!item.is_string())
      throw Error(ErrorCode::ParseError, "'" + key + "' entries must be rational strings");
    out.push_back(parse_rational(item.str()));
  }
  return out;
}

std::vector<int> int_array(const Value& v, const std::string& key) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "'" + key + "' must be an array");
  std::vector<int> out;
  for (const auto& item : v.array()) {
    if (!item.is_int())
      throw Error(ErrorCode::ParseError, "'" + key + "' entries must be integers");
    out.push_back(static_cast<int>(item.integer()));
  }
  return out;
}

}  // namespace toml

namespace {

LineColoring line_coloring_from_table(const std::map<std::string, toml::Value>& table) {
  Rational period = parse_rational(toml::require(table, "period").str());
  auto breaks = toml::rational_array(toml::require(table, "breaks"), "breaks");
  auto colors = toml::int_array(toml::require(table, "colors"), "colors");
  return LineColoring(period, std::move(breaks), std::move(colors),
                      /*allow_adjacent_same=*/true);
}

}  // namespace

LineColoring parse_line_coloring_toml(const std::string& text) {
  toml::Parser parser(text);
  return line_coloring_from_table(parser.parse());
}

std::string serialize_line_coloring_toml(const LineColoring& c) {
  std::ostringstream out;
  out << "period = \"" << to_string(c.period()) << "\"\n";
  out << "breaks = [";
  for (std::size_t i = 0; i < c.breaks().size(); ++i)
    out << (i ? ", " : "") << '"' << to_string(c.breaks()[i]) << '"';
  out << "]\ncolors = [";
  for (std::size_t i = 0; i < c.colors().size(); ++i) out << (i ? ", " : "") << c.colors()[i];
  out << "]\n";
  return out.str();
}

PlaneColoring parse_plane_coloring_toml(const std::string& text) {
  toml::Parser parser(text);
  auto table = parser.parse();
  const std::string kind = toml::require(table, "kind").str();
  if (kind == "horizontal") return PlaneColoring::horizontal_lift(line_coloring_from_table(table));
  if (kind == "diagonal") return PlaneColoring::diagonal_lift(line_coloring_from_table(table));
  if (kind == "grid") {
    GridSpec spec;
    spec.px = parse_rational(toml::require(table, "px").str());
    spec.py = parse_rational(toml::require(table, "py").str());
    spec.xbreaks = toml::rational_array(toml::require(table, "xbreaks"), "xbreaks");
    spec.ybreaks = toml::rational_array(toml::require(table, "ybreaks"), "ybreaks");
    const auto& rows = toml::require(table, "table");
    if (!rows.is_array()) throw Error(ErrorCode::ParseError, "'table' must be an array of rows");
    for (const auto& row : rows.array()) spec.table.push_back(toml::int_array(row, "table row"));
    return PlaneColoring::grid_periodic(std::move(spec));
  }
  throw Error(ErrorCode::ParseError, "kind must be horizontal, diagonal or grid");
}

std::string serialize_plane_coloring_toml(const PlaneColoring& p) {
  std::ostringstream out;
  switch (p.kind()) {
    case PlaneColoring::Kind::HorizontalLift:
      out << "kind = \"horizontal\"\n" << serialize_line_coloring_toml(p.line());
      break;
    case PlaneColoring::Kind::DiagonalLift:
      out << "kind = \"diagonal\"\n" << serialize_line_coloring_toml(p.line());
      break;
    case PlaneColoring::Kind::GridPeriodic: {
      const GridSpec& g = p.grid();
      out << "kind = \"grid\"\n";
      out << "px = \"" << to_string(g.px) << "\"\npy = \"" << to_string(g.py) << "\"\n";
      auto emit_breaks = [&out](const char* key, const std::vector<Rational>& breaks) {
        out << key << " = [";
        for (std::size_t i = 0; i < breaks.size(); ++i)
          out << (i ? ", " : "") << '"' << to_string(breaks[i]) << '"';
        out << "]\n";
      };
      emit_breaks("xbreaks", g.xbreaks);
      emit_breaks("ybreaks", g.ybreaks);
      out << "table = [";
      for (std::size_t r = 0; r < g.table.size(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t i = 0; i < g.table[r].size(); ++i)
          out << (i ? ", " : "") << g.table[r][i];
        out << "]";
      }
      out << "]\n";
      break;
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace cheby
