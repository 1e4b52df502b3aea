#include "satfrac/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace satfrac {

namespace {

std::string where(const std::string& source, int line, int column) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  if (column > 0) out += ":" + std::to_string(column);
  return out;
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text, int first_line = 1) {
  std::vector<Line> lines;
  int number = first_line;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    lines.push_back({number++, line});
    pos = end + 1;
  }
  return lines;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; });
}

std::optional<int> to_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// "I J" header, or nullopt if the line is not a header.
std::optional<std::pair<int, int>> parse_header(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string first;
  std::string second;
  std::string extra;
  if (!(in >> first >> second) || (in >> extra)) return std::nullopt;
  auto a = to_int(first);
  auto b = to_int(second);
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

Fraction parse_grid_block(const std::vector<Line>& lines, const std::string& source) {
  std::size_t k = 0;
  std::optional<std::pair<int, int>> header = parse_header(lines.front().text);
  if (header) ++k;

  std::vector<Point> points;
  int rows = 0;
  int width = -1;
  for (; k < lines.size(); ++k) {
    const Line& line = lines[k];
    std::string_view text = line.text;
    std::size_t lead = text.find_first_not_of(" \t");
    text.remove_prefix(lead == std::string_view::npos ? text.size() : lead);
    const int offset = static_cast<int>(line.text.size() - text.size());
    if (width < 0) width = static_cast<int>(text.size());
    if (static_cast<int>(text.size()) != width) {
      throw ParseError(source, line.number, 0,
                       "ragged grid: row has " + std::to_string(text.size()) + " cells, expected " +
                           std::to_string(width));
    }
    ++rows;
    for (int c = 0; c < width; ++c) {
      const char ch = text[static_cast<std::size_t>(c)];
      if (ch == '1') {
        points.push_back({rows, c + 1});
      } else if (ch != '0') {
        throw ParseError(source, line.number, offset + c + 1,
                         std::string("cell (") + std::to_string(rows) + "," + std::to_string(c + 1) +
                             ") holds '" + ch + "', expected '0' or '1'");
      }
    }
  }
  if (rows == 0) throw ParseError(source, lines.front().number, 0, "grid has no rows");
  if (header && (header->first != rows || header->second != width)) {
    throw ParseError(source, lines.front().number, 0,
                     "header says " + std::to_string(header->first) + "x" + std::to_string(header->second) +
                         " but the grid is " + std::to_string(rows) + "x" + std::to_string(width));
  }
  try {
    return Fraction(DesignSize(rows, width), std::move(points));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, lines.front().number, 0, e.what());
  }
}

// Maps a byte offset into (line, column), both 1-based.
std::pair<int, int> locate(std::string_view text, std::size_t offset, int first_line) {
  offset = std::min(offset, text.size());
  int line = first_line;
  std::size_t line_start = 0;
  for (std::size_t k = 0; k < offset; ++k) {
    if (text[k] == '\n') {
      ++line;
      line_start = k + 1;
    }
  }
  return {line, static_cast<int>(offset - line_start) + 1};
}

Fraction parse_json_document(std::string_view text, const std::string& source, int first_line) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = locate(text, e.byte == 0 ? 0 : e.byte - 1, first_line);
    throw ParseError(source, line, col, "invalid JSON");
  }
  if (!doc.is_object()) throw ParseError(source, first_line, 0, "expected a JSON object");
  for (const char* key : {"I", "J", "points"}) {
    if (!doc.contains(key)) throw ParseError(source, first_line, 0, std::string("missing key \"") + key + "\"");
  }
  if (!doc["I"].is_number_integer() || !doc["J"].is_number_integer()) {
    throw ParseError(source, first_line, 0, "\"I\" and \"J\" must be integers");
  }
  const nlohmann::json& pts = doc["points"];
  if (!pts.is_array()) throw ParseError(source, first_line, 0, "\"points\" must be an array");

  std::optional<DesignSize> size;
  try {
    size.emplace(doc["I"].get<int>(), doc["J"].get<int>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, first_line, 0, e.what());
  }
  std::vector<Point> points;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& p = pts[k];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw ParseError(source, first_line, 0, "points[" + std::to_string(k) + "] must be [i,j]");
    }
    Point pt{p[0].get<int>(), p[1].get<int>()};
    if (!size->contains(pt)) {
      throw ParseError(source, first_line, 0,
                       "points[" + std::to_string(k) + "] = " + to_string(pt) + " lies outside the design");
    }
    if (std::find(points.begin(), points.end(), pt) != points.end()) {
      throw ParseError(source, first_line, 0,
                       "points[" + std::to_string(k) + "] = " + to_string(pt) + " is a duplicate");
    }
    points.push_back(pt);
  }
  return Fraction(*size, std::move(points));
}

std::vector<std::vector<Line>> grid_blocks(std::string_view text) {
  std::vector<std::vector<Line>> blocks;
  std::vector<Line> current;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) {
      if (!current.empty()) blocks.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(line);
    }
  }
  if (!current.empty()) blocks.push_back(std::move(current));
  return blocks;
}

bool looks_like_json(std::string_view text) {
  std::size_t k = text.find_first_not_of(" \t\r\n");
  return k != std::string_view::npos && text[k] == '{';
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, int column, const std::string& message)
    : std::runtime_error(where(source, line, column) + ": " + message), line_(line), column_(column) {}

Fraction parse_fraction(std::string_view text, const std::string& source) {
  if (looks_like_json(text)) return parse_json_document(text, source, 1);
  auto blocks = grid_blocks(text);
  if (blocks.empty()) throw ParseError(source, 0, 0, "empty input");
  if (blocks.size() > 1) {
    throw ParseError(source, blocks[1].front().number, 0, "unexpected content after the grid");
  }
  return parse_grid_block(blocks.front(), source);
}

Fraction parse_fraction_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  return parse_fraction(read_text(in), path.string());
}

std::vector<Fraction> parse_fractions(std::string_view text, const std::string& source) {
  std::vector<Fraction> out;
  if (looks_like_json(text)) {
    for (const Line& line : split_lines(text)) {
      if (blank(line.text)) continue;
      out.push_back(parse_json_document(line.text, source, line.number));
    }
    return out;
  }
  for (const auto& block : grid_blocks(text)) out.push_back(parse_grid_block(block, source));
  return out;
}

std::string format_grid(const Fraction& f) {
  std::ostringstream out;
  out << f.size().a_levels() << ' ' << f.size().b_levels() << '\n' << to_table(f);
  return out.str();
}

std::string format_json(const Fraction& f) {
  nlohmann::ordered_json points = nlohmann::ordered_json::array();
  for (const Point& p : f.points()) points.push_back({p.a, p.b});
  nlohmann::ordered_json doc;
  doc["I"] = f.size().a_levels();
  doc["J"] = f.size().b_levels();
  doc["points"] = std::move(points);
  return doc.dump();
}

void write_record(std::ostream& os, const Fraction& f, RecordFormat format) {
  if (format == RecordFormat::json) {
    os << format_json(f) << '\n';
  } else {
    os << format_grid(f) << '\n';
  }
}

std::vector<int> parse_level_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view item = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    auto value = to_int(item);
    if (!value) {
      throw ParseError("margins", 0, static_cast<int>(pos) + 1,
                       "expected a comma-separated list of integers, got \"" + std::string(text) + "\"");
    }
    out.push_back(*value);
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string read_text(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace satfrac
