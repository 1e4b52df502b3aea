#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "satfrac/design.hpp"

namespace satfrac {

/// Malformed input. line/column are 1-based; 0 means "not applicable".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

enum class RecordFormat { grid, json };

/// Parses one fraction. JSON when the first non-whitespace character is '{',
/// otherwise a grid of '0'/'1' rows with an optional "I J" header line.
Fraction parse_fraction(std::string_view text, const std::string& source = "<input>");
Fraction parse_fraction_file(const std::filesystem::path& path);

/// Parses a stream of records as written by write_record: JSON objects one
/// per line, or grid blocks separated by blank lines.
std::vector<Fraction> parse_fractions(std::string_view text, const std::string& source = "<input>");

/// "I J" header line followed by I rows of J characters.
std::string format_grid(const Fraction& f);
/// {"I":..,"J":..,"points":[[i,j],...]} on a single line.
std::string format_json(const Fraction& f);

/// Writes one streaming record. Grid records are followed by a blank line.
void write_record(std::ostream& os, const Fraction& f, RecordFormat format);

/// "3,1,2" -> {3,1,2}. Throws ParseError on empty items or non-integers.
std::vector<int> parse_level_list(std::string_view text);

std::string read_text(std::istream& in);

}  // namespace satfrac
