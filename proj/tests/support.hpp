#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "satfrac/design.hpp"

namespace testing_support {

inline satfrac::Fraction fraction(int a_levels, int b_levels, std::initializer_list<std::pair<int, int>> points) {
  std::vector<satfrac::Point> pts;
  for (auto [a, b] : points) pts.push_back({a, b});
  return {satfrac::DesignSize(a_levels, b_levels), pts};
}

inline satfrac::BinaryTable table(const std::vector<std::vector<int>>& rows) {
  return satfrac::BinaryTable::from_rows(rows);
}

// Six-point saturated fraction of the 3x4 grid with det(X_F) = 1.
inline satfrac::Fraction example_fraction() {
  return fraction(3, 4, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}});
}

// Three fractions of the 4x4 grid: a 3-cycle plus a pendant point, a single
// 4-cycle, and a 4-cycle made of two 2-cycles.
inline satfrac::Fraction f1() {
  return fraction(4, 4, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {4, 3}});
}
inline satfrac::Fraction f2() {
  return fraction(4, 4, {{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 2}, {3, 3}, {4, 1}, {4, 4}});
}
inline satfrac::Fraction f3() {
  return fraction(4, 4, {{1, 1}, {1, 3}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 2}, {4, 4}});
}

// Satisfies the four margin conditions but holds a 3-cycle.
inline satfrac::Fraction margin_counterexample() {
  return fraction(5, 5, {{1, 1}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}, {4, 4}, {4, 5}, {5, 4}});
}

}  // namespace testing_support
