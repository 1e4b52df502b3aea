#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "satfrac/design.hpp"
#include "satfrac/errors.hpp"
#include "satfrac/rng.hpp"

namespace satfrac {

/// Closed path (i1,j1),(j1,i2),(i2,j2),...,(jk,i1) in K_{I,J}: visits cells
/// (i1,j1),(i2,j1),(i2,j2),(i3,j2),...,(ik,jk),(i1,jk).
class Circuit {
 public:
  /// Throws std::invalid_argument unless both sequences have the same length
  /// k >= 2, hold distinct levels, and fit the design.
  Circuit(DesignSize size, std::vector<int> a_levels, std::vector<int> b_levels);

  /// Reads an alternating edge listing "(i1,j1),(j1,i2),(i2,j2),...,(jk,i1)".
  static Circuit from_edge_list(DesignSize size, const std::vector<std::pair<int, int>>& edges);

  const DesignSize& size() const noexcept { return size_; }
  int degree() const noexcept { return static_cast<int>(a_levels_.size()); }
  const std::vector<int>& a_levels() const noexcept { return a_levels_; }
  const std::vector<int>& b_levels() const noexcept { return b_levels_; }

  /// The 2k cells along the path, starting at (i1,j1).
  std::vector<Point> cells() const;
  Circuit reversed() const;

 private:
  DesignSize size_;
  std::vector<int> a_levels_;
  std::vector<int> b_levels_;
};

/// An I×J table with entries in {-1,0,1} and all row/column sums zero.
class MarkovMove {
 public:
  /// Throws std::invalid_argument on wrong length, entries outside {-1,0,1},
  /// or non-zero margins.
  MarkovMove(DesignSize size, std::vector<std::int8_t> entries);

  const DesignSize& size() const noexcept { return size_; }
  int at(int a, int b) const noexcept {
    return entries_[static_cast<std::size_t>((a - 1) * size_.b_levels() + (b - 1))];
  }
  std::span<const std::int8_t> entries() const noexcept { return entries_; }
  MarkovMove negated() const;
  /// Cells with a non-zero entry, in lexicographic order.
  std::vector<Point> support() const;

  friend auto operator<=>(const MarkovMove&, const MarkovMove&) = default;

 private:
  DesignSize size_;
  std::vector<std::int8_t> entries_;
};

std::ostream& operator<<(std::ostream& os, const MarkovMove& m);

/// +1 on the cells (i_t, j_t), -1 on the cells (i_{t+1}, j_t).
MarkovMove circuit_to_move(const Circuit& c);

/// All circuits of K_{I,J} with 2 <= degree <= max_degree (default
/// min(I,J)), each once: i1 is the smallest A-level and j1 < jk.
std::vector<Circuit> enumerate_circuits(DesignSize size, int max_degree = 0);

inline constexpr std::uint64_t kDefaultBasisCap = 1'000'000;

/// One move per circuit. Throws CapExceeded if the basis would have more than
/// `cap` moves.
std::vector<MarkovMove> markov_basis(DesignSize size, int max_degree = 0,
                                     std::uint64_t cap = kDefaultBasisCap);

/// t + sign*m if every entry stays in {0,1}. Throws std::invalid_argument on
/// shape mismatch or a sign other than +-1.
std::optional<BinaryTable> apply_move(const BinaryTable& t, const MarkovMove& m, int sign);

struct WalkOptions {
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t burn_in = 0;
  /// Emit the state every `thin` steps after burn-in (0 disables emission).
  std::uint64_t thin = 0;
};

/// Visitor receives (step index, state) for emitted states.
using WalkVisitor = std::function<void(std::uint64_t, const BinaryTable&)>;

/// Lazy chain: pick a move and a sign uniformly; apply if the result is a
/// 0/1 table, otherwise stay. Throws std::invalid_argument on an empty basis.
BinaryTable random_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                        std::uint64_t steps, std::uint64_t seed);
BinaryTable random_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                        const WalkOptions& options, const WalkVisitor& visit);

using TableWeight = std::function<double(const BinaryTable&)>;

/// Metropolis-Hastings variant accepting a proposal with probability
/// min(1, w(next)/w(current)). Uses the same random stream as random_walk and
/// draws the acceptance uniform only when the ratio is below one. Throws
/// std::domain_error on a non-positive weight.
BinaryTable metropolis_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                            const TableWeight& weight, std::uint64_t steps, std::uint64_t seed);
BinaryTable metropolis_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                            const TableWeight& weight, const WalkOptions& options,
                            const WalkVisitor& visit);

inline constexpr std::uint64_t kDefaultFiberCap = 1'000'000;

/// Every 0/1 table with these margins, in lexicographic order of entries.
/// Throws CapExceeded once more than `cap` tables are found and
/// std::invalid_argument if the margin lengths do not match the size.
std::vector<BinaryTable> fiber_enumerate(const Margins& m, DesignSize size,
                                         std::uint64_t cap = kDefaultFiberCap);

/// Whether the fiber is a single component of the graph whose edges are
/// +-basis moves.
bool verify_connectivity(const Margins& m, DesignSize size, const std::vector<MarkovMove>& basis,
                         std::uint64_t cap = kDefaultFiberCap);

}  // namespace satfrac
