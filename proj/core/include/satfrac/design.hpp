#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace satfrac {

/// A design point (cell) of the I×J grid. Levels are 1-based.
struct Point {
  int a = 1;  ///< level of factor A, in [1..I]
  int b = 1;  ///< level of factor B, in [1..J]

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Number of levels of the two factors. Both must be at least 2.
class DesignSize {
 public:
  DesignSize(int a_levels, int b_levels);

  int a_levels() const noexcept { return a_levels_; }
  int b_levels() const noexcept { return b_levels_; }
  int cells() const noexcept { return a_levels_ * b_levels_; }
  /// Number of parameters of the simple-effect model, I + J - 1.
  int parameters() const noexcept { return a_levels_ + b_levels_ - 1; }

  bool contains(Point p) const noexcept {
    return p.a >= 1 && p.a <= a_levels_ && p.b >= 1 && p.b <= b_levels_;
  }
  DesignSize transposed() const { return {b_levels_, a_levels_}; }

  friend auto operator<=>(const DesignSize&, const DesignSize&) = default;

 private:
  int a_levels_;
  int b_levels_;
};

/// A set of distinct design points, stored in lexicographic order so that
/// equality and ordering are structural.
class Fraction {
 public:
  /// Throws std::invalid_argument on points outside the grid or duplicates.
  Fraction(DesignSize size, std::vector<Point> points);

  static Fraction empty(DesignSize size) { return {size, {}}; }
  static Fraction full(DesignSize size);

  const DesignSize& size() const noexcept { return size_; }
  std::span<const Point> points() const noexcept { return points_; }
  std::size_t cardinality() const noexcept { return points_.size(); }
  bool contains(Point p) const noexcept;

  /// Swaps the roles of the two factors.
  Fraction transposed() const;

  friend auto operator<=>(const Fraction&, const Fraction&) = default;

 private:
  DesignSize size_;
  std::vector<Point> points_;
};

/// Row sums (factor A) and column sums (factor B) of a fraction's table.
struct Margins {
  std::vector<int> a;
  std::vector<int> b;

  friend auto operator<=>(const Margins&, const Margins&) = default;
};

Margins margins(const Fraction& f);

/// The 0/1 incidence table N(F) of a fraction, row-major.
class BinaryTable {
 public:
  explicit BinaryTable(DesignSize size);
  /// Throws std::invalid_argument unless entries has I*J values in {0,1}.
  BinaryTable(DesignSize size, std::vector<std::uint8_t> entries);

  /// Builds a table from nested rows. Throws std::invalid_argument on ragged
  /// rows, fewer than two rows/columns, or values outside {0,1}.
  static BinaryTable from_rows(const std::vector<std::vector<int>>& rows);

  const DesignSize& size() const noexcept { return size_; }
  int at(int a, int b) const noexcept {
    return entries_[static_cast<std::size_t>((a - 1) * size_.b_levels() + (b - 1))];
  }
  std::span<const std::uint8_t> entries() const noexcept { return entries_; }
  int ones() const noexcept;
  Margins margins() const;

  friend auto operator<=>(const BinaryTable&, const BinaryTable&) = default;

 private:
  DesignSize size_;
  std::vector<std::uint8_t> entries_;
};

BinaryTable to_table(const Fraction& f);
Fraction from_table(const BinaryTable& t);

std::string to_string(Point p);
/// "[(1,1),(1,2),...]"
std::string to_string(std::span<const Point> points);
std::string to_string(const Fraction& f);

std::ostream& operator<<(std::ostream& os, Point p);
std::ostream& operator<<(std::ostream& os, const Fraction& f);
std::ostream& operator<<(std::ostream& os, const BinaryTable& t);

}  // namespace satfrac
