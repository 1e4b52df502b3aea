#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the algorithms it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "satfrac/design.hpp"

namespace oracle {

using satfrac::DesignSize;
using satfrac::Fraction;
using satfrac::Point;

inline std::vector<Point> grid_points(DesignSize size) {
  std::vector<Point> out;
  for (int a = 1; a <= size.a_levels(); ++a)
    for (int b = 1; b <= size.b_levels(); ++b) out.push_back({a, b});
  return out;
}

/// Calls visit on every n-point subset of the grid (lexicographic masks).
inline void for_each_subset(DesignSize size, int n, const std::function<void(const Fraction&)>& visit) {
  const std::vector<Point> cells = grid_points(size);
  const int total = static_cast<int>(cells.size());
  if (n > total) return;
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::vector<Point> pts;
    for (int k : idx) pts.push_back(cells[static_cast<std::size_t>(k)]);
    visit(Fraction(size, pts));
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == total - n + pos) --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int t = pos + 1; t < n; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
}

/// Leibniz expansion over all permutations.
inline std::int64_t leibniz_determinant(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::int64_t det = 0;
  do {
    int inversions = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (perm[x] > perm[y]) ++inversions;
    std::int64_t term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n && term != 0; ++r) term *= m[r][perm[r]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Rank via Gaussian elimination over the rationals.
inline std::size_t rational_rank(const std::vector<std::vector<std::int64_t>>& m) {
  using Q = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Q>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Q f = a[r][c] / a[rank][c];
      for (std::size_t x = c; x < cols; ++x) a[r][x] -= f * a[rank][x];
    }
    ++rank;
  }
  return rank;
}

/// Model-matrix row written out from the column definitions.
inline std::vector<std::int64_t> model_row(DesignSize size, Point p) {
  std::vector<std::int64_t> row{1};
  for (int i = 1; i < size.a_levels(); ++i) row.push_back(p.a == i ? 1 : 0);
  for (int j = 1; j < size.b_levels(); ++j) row.push_back(p.b == j ? 1 : 0);
  return row;
}

/// Count of fixed-point-free permutations by enumeration.
inline std::uint64_t derangements(int k) {
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    bool fixed = false;
    for (int x = 0; x < k; ++x) fixed = fixed || perm[static_cast<std::size_t>(x)] == x;
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Each used level of each factor appears exactly twice, with k used levels per factor.
inline bool is_k_cycle_set(const Fraction& f, int k) {
  std::map<int, int> a;
  std::map<int, int> b;
  for (const Point& p : f.points()) {
    ++a[p.a];
    ++b[p.b];
  }
  if (static_cast<int>(a.size()) != k || static_cast<int>(b.size()) != k) return false;
  for (auto& kv : a)
    if (kv.second != 2) return false;
  for (auto& kv : b)
    if (kv.second != 2) return false;
  return true;
}

/// Connected components of the bipartite graph on the levels a fraction uses.
inline int components(const Fraction& f) {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;  // (side, level)
  for (const Point& p : f.points()) {
    adj[{0, p.a}].push_back({1, p.b});
    adj[{1, p.b}].push_back({0, p.a});
  }
  std::set<std::pair<int, int>> seen;
  int count = 0;
  for (auto& [v, _] : adj) {
    if (seen.count(v)) continue;
    ++count;
    std::vector<std::pair<int, int>> stack{v};
    seen.insert(v);
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return count;
}

/// Graph-theoretic acyclicity by edge count: a forest has #edges = #vertices - #components.
inline bool is_forest(const Fraction& f) {
  std::set<int> a;
  std::set<int> b;
  for (const Point& p : f.points()) {
    a.insert(p.a);
    b.insert(p.b);
  }
  const int vertices = static_cast<int>(a.size() + b.size());
  return static_cast<int>(f.cardinality()) == vertices - components(f);
}

/// Number of ways to split f into two halves with one replicate per used level
/// each, counted as unordered pairs.
inline int oa_splits(const Fraction& f) {
  const auto pts = f.points();
  const int n = static_cast<int>(pts.size());
  int ordered = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) * 2 != n) continue;
    std::map<int, int> a1, b1, a2, b2;
    for (int k = 0; k < n; ++k) {
      const Point& p = pts[static_cast<std::size_t>(k)];
      if (mask & (1u << k)) {
        ++a1[p.a];
        ++b1[p.b];
      } else {
        ++a2[p.a];
        ++b2[p.b];
      }
    }
    auto once = [&](const std::map<int, int>& m) {
      return std::all_of(m.begin(), m.end(), [](auto& kv) { return kv.second == 1; });
    };
    if (once(a1) && once(b1) && once(a2) && once(b2) && static_cast<int>(a1.size()) * 2 == n) ++ordered;
  }
  return ordered / 2;
}

/// Canonical form under row permutations, column permutations and (for
/// square designs) transposition: the lexicographically smallest table.
inline std::vector<std::uint8_t> canonical_form(const Fraction& f) {
  const int rows = f.size().a_levels();
  const int cols = f.size().b_levels();
  std::vector<std::uint8_t> best;
  auto consider = [&](const std::vector<std::vector<std::uint8_t>>& t) {
    const int r = static_cast<int>(t.size());
    const int c = static_cast<int>(t[0].size());
    std::vector<int> rp(static_cast<std::size_t>(r)), cp(static_cast<std::size_t>(c));
    std::iota(rp.begin(), rp.end(), 0);
    do {
      std::iota(cp.begin(), cp.end(), 0);
      do {
        std::vector<std::uint8_t> flat;
        flat.reserve(static_cast<std::size_t>(r * c));
        for (int x = 0; x < r; ++x)
          for (int y = 0; y < c; ++y)
            flat.push_back(t[static_cast<std::size_t>(rp[static_cast<std::size_t>(x)])]
                            [static_cast<std::size_t>(cp[static_cast<std::size_t>(y)])]);
        if (best.empty() || flat < best) best = flat;
      } while (std::next_permutation(cp.begin(), cp.end()));
    } while (std::next_permutation(rp.begin(), rp.end()));
  };
  std::vector<std::vector<std::uint8_t>> t(static_cast<std::size_t>(rows),
                                           std::vector<std::uint8_t>(static_cast<std::size_t>(cols), 0));
  for (const Point& p : f.points()) t[static_cast<std::size_t>(p.a - 1)][static_cast<std::size_t>(p.b - 1)] = 1;
  consider(t);
  if (rows == cols) {
    std::vector<std::vector<std::uint8_t>> tt(t[0].size(), std::vector<std::uint8_t>(t.size()));
    for (std::size_t x = 0; x < t.size(); ++x)
      for (std::size_t y = 0; y < t[0].size(); ++y) tt[y][x] = t[x][y];
    consider(tt);
  }
  return best;
}

/// Pearson statistic against a uniform distribution over `counts.size()` cells.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0;
  for (std::uint64_t c : counts) stat += (static_cast<double>(c) - expected) * (static_cast<double>(c) - expected) / expected;
  return stat;
}

/// Pearson statistic against arbitrary expected probabilities.
inline double chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probs) {
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  double stat = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    const double e = total * probs[k];
    stat += (static_cast<double>(counts[k]) - e) * (static_cast<double>(counts[k]) - e) / e;
  }
  return stat;
}

/// Upper critical value of chi-square with `dof` degrees of freedom.
inline double chi_square_critical(std::size_t dof, double alpha) {
  boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

}  // namespace oracle
