#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "satfrac/design.hpp"
#include "satfrac/numeric.hpp"

namespace satfrac {

/// A 2k-point subset using k levels of each factor, every used level exactly
/// twice. Such a set may consist of several disjoint closed paths
/// (sub-cycles) in the bipartite incidence graph.
class KCycle {
 public:
  /// Throws std::invalid_argument if `points` violates the k-cycle conditions.
  explicit KCycle(Fraction points);

  int k() const noexcept { return k_; }
  const Fraction& points() const noexcept { return points_; }
  /// Number of connected sub-cycles (1 for a single closed path).
  int components() const;

  friend auto operator<=>(const KCycle&, const KCycle&) = default;

 private:
  Fraction points_;
  int k_;
};

/// Two disjoint fractions, each with one replicate per used level, whose
/// union is a k-cycle.
struct OAPair {
  Fraction first;
  Fraction second;
};

/// A single closed path contained in f, or nullopt if f is cycle-free. The
/// witness passes through the lexicographically smallest point of f lying on
/// any cycle and is found by breadth-first search with smallest-level-first
/// neighbour order, so the result is deterministic.
std::optional<KCycle> find_cycle(const Fraction& f);

/// True iff the bipartite graph with f's points as edges is not a forest.
/// Uses union-find; independent of find_cycle.
bool contains_cycle(const Fraction& f);

/// Alternating row/column assignment of the cycle's points to two arrays,
/// restarting at the smallest unassigned point for each sub-cycle.
OAPair decompose_cycle(const KCycle& c);

/// Whether every t-tuple of used levels appears equally often. Only the
/// levels that actually occur in f are considered. Supports t in {1, 2};
/// throws std::invalid_argument otherwise.
bool is_orthogonal_array(const Fraction& f, int strength);

/// Number of fixed-point-free permutations of k elements.
BigInt derangements(int k);

/// k! * !k / 2 for k >= 2.
BigInt count_k_cycles(int k);

/// Visits every k-cycle point set of the grid once, in deterministic order.
/// The visitor returns false to stop. Throws std::invalid_argument unless
/// 2 <= k <= min(I, J).
void for_each_k_cycle(DesignSize size, int k, const std::function<bool(const KCycle&)>& visit);

std::vector<KCycle> enumerate_k_cycles(DesignSize size, int k);

}  // namespace satfrac
