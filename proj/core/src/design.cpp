#include "satfrac/design.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace satfrac {

DesignSize::DesignSize(int a_levels, int b_levels) : a_levels_(a_levels), b_levels_(b_levels) {
  if (a_levels < 2 || b_levels < 2) {
    throw std::invalid_argument("design size must be at least 2x2, got " +
                                std::to_string(a_levels) + "x" + std::to_string(b_levels));
  }
}

Fraction::Fraction(DesignSize size, std::vector<Point> points)
    : size_(size), points_(std::move(points)) {
  for (const Point& p : points_) {
    if (!size_.contains(p)) {
      throw std::invalid_argument("point " + to_string(p) + " lies outside the " +
                                  std::to_string(size_.a_levels()) + "x" +
                                  std::to_string(size_.b_levels()) + " design");
    }
  }
  std::sort(points_.begin(), points_.end());
  auto dup = std::adjacent_find(points_.begin(), points_.end());
  if (dup != points_.end()) {
    throw std::invalid_argument("duplicate point " + to_string(*dup));
  }
}

Fraction Fraction::full(DesignSize size) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(size.cells()));
  for (int a = 1; a <= size.a_levels(); ++a)
    for (int b = 1; b <= size.b_levels(); ++b) pts.push_back({a, b});
  return {size, std::move(pts)};
}

bool Fraction::contains(Point p) const noexcept {
  return std::binary_search(points_.begin(), points_.end(), p);
}

Fraction Fraction::transposed() const {
  std::vector<Point> pts;
  pts.reserve(points_.size());
  for (const Point& p : points_) pts.push_back({p.b, p.a});
  return {size_.transposed(), std::move(pts)};
}

Margins margins(const Fraction& f) {
  Margins m{std::vector<int>(static_cast<std::size_t>(f.size().a_levels()), 0),
            std::vector<int>(static_cast<std::size_t>(f.size().b_levels()), 0)};
  for (const Point& p : f.points()) {
    ++m.a[static_cast<std::size_t>(p.a - 1)];
    ++m.b[static_cast<std::size_t>(p.b - 1)];
  }
  return m;
}

BinaryTable::BinaryTable(DesignSize size)
    : size_(size), entries_(static_cast<std::size_t>(size.cells()), 0) {}

BinaryTable::BinaryTable(DesignSize size, std::vector<std::uint8_t> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(size_.cells())) {
    throw std::invalid_argument("table has " + std::to_string(entries_.size()) +
                                " entries, expected " + std::to_string(size_.cells()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (entries_[k] > 1) {
      throw std::invalid_argument("entry " + std::to_string(entries_[k]) + " at cell " +
                                  to_string(Point{static_cast<int>(k) / size_.b_levels() + 1,
                                                  static_cast<int>(k) % size_.b_levels() + 1}) +
                                  " is not 0 or 1");
    }
  }
}

BinaryTable BinaryTable::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("table has no rows");
  const std::size_t width = rows.front().size();
  std::vector<std::uint8_t> entries;
  entries.reserve(rows.size() * width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw std::invalid_argument("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(rows[r].size()) + " entries, expected " +
                                  std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      int v = rows[r][c];
      if (v != 0 && v != 1) {
        throw std::invalid_argument("entry " + std::to_string(v) + " at cell (" +
                                    std::to_string(r + 1) + "," + std::to_string(c + 1) +
                                    ") is not 0 or 1");
      }
      entries.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return {DesignSize(static_cast<int>(rows.size()), static_cast<int>(width)), std::move(entries)};
}

int BinaryTable::ones() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

Margins BinaryTable::margins() const {
  Margins m{std::vector<int>(static_cast<std::size_t>(size_.a_levels()), 0),
            std::vector<int>(static_cast<std::size_t>(size_.b_levels()), 0)};
  for (int a = 1; a <= size_.a_levels(); ++a) {
    for (int b = 1; b <= size_.b_levels(); ++b) {
      int v = at(a, b);
      m.a[static_cast<std::size_t>(a - 1)] += v;
      m.b[static_cast<std::size_t>(b - 1)] += v;
    }
  }
  return m;
}

BinaryTable to_table(const Fraction& f) {
  const int cols = f.size().b_levels();
  std::vector<std::uint8_t> entries(static_cast<std::size_t>(f.size().cells()), 0);
  for (const Point& p : f.points()) {
    entries[static_cast<std::size_t>((p.a - 1) * cols + (p.b - 1))] = 1;
  }
  return {f.size(), std::move(entries)};
}

Fraction from_table(const BinaryTable& t) {
  std::vector<Point> pts;
  for (int a = 1; a <= t.size().a_levels(); ++a)
    for (int b = 1; b <= t.size().b_levels(); ++b)
      if (t.at(a, b) == 1) pts.push_back({a, b});
  return {t.size(), std::move(pts)};
}

std::string to_string(Point p) {
  return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

std::string to_string(std::span<const Point> points) {
  std::string out = "[";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) out += ",";
    out += to_string(points[k]);
  }
  return out + "]";
}

std::string to_string(const Fraction& f) { return to_string(f.points()); }

std::ostream& operator<<(std::ostream& os, Point p) { return os << to_string(p); }

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.size().a_levels() << "x" << f.size().b_levels() << " " << to_string(f);
}

std::ostream& operator<<(std::ostream& os, const BinaryTable& t) {
  for (int a = 1; a <= t.size().a_levels(); ++a) {
    for (int b = 1; b <= t.size().b_levels(); ++b) os << t.at(a, b);
    os << '\n';
  }
  return os;
}

}  // namespace satfrac
