#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "satfrac/design.hpp"
#include "satfrac/numeric.hpp"
#include "satfrac/rng.hpp"

namespace satfrac {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// #f == I+J-1 and f contains no cycle.
bool is_saturated(const Fraction& f);

/// Number of saturated fractions with the given margins (product of two
/// multinomial coefficients). The design is |a| x |b|. Throws
/// std::invalid_argument if a margin entry is < 1 or the sums differ from
/// |a| + |b| - 1.
BigInt count_with_margins(const Margins& m);

/// I^(J-1) * J^(I-1).
BigInt count_saturated(DesignSize size);

/// Counts split by margin pair; `total` equals the sum of all entries.
struct SaturatedCount {
  BigInt total;
  std::map<Margins, BigInt> by_margins;
};

/// Evaluates count_with_margins on every valid margin pair of the design.
SaturatedCount saturated_count_table(DesignSize size);

/// count_saturated(size) / C(IJ, I+J-1).
Rational saturation_probability(DesignSize size);

/// Every saturated fraction with margins m, each exactly once, built by
/// repeatedly attaching a margin-1 level to a level of margin > 1.
/// The visitor returns false to stop. Throws std::invalid_argument on invalid
/// margins (same rules as count_with_margins).
void for_each_with_margins(const Margins& m, const std::function<bool(const Fraction&)>& visit);
std::vector<Fraction> generate_with_margins(const Margins& m);

/// Every saturated fraction of the design via spanning-tree enumeration of
/// K_{I,J}. Throws CapExceeded before visiting anything if the total count
/// exceeds `cap`.
void for_each_saturated(DesignSize size, const std::function<bool(const Fraction&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Fraction> enumerate_saturated(DesignSize size, std::uint64_t cap = kDefaultEnumerationCap);

/// Exactly uniform draw over all saturated fractions (Wilson's algorithm on
/// K_{I,J}).
Fraction sample_uniform_saturated(DesignSize size, Rng& rng);
Fraction sample_uniform_saturated(DesignSize size, std::uint64_t seed);

/// Margin conditions that every saturated square design satisfies.
struct MarginLemmaReport {
  bool square = false;
  bool saturated = false;
  /// [0] margin sums equal I+J-1; [1] every margin >= 1; [2] some margin on
  /// each side equals 1; [3] the point of each margin-1 row sits in a column
  /// of margin > 1.
  std::array<bool, 4> conditions{};

  bool all_conditions() const { return conditions[0] && conditions[1] && conditions[2] && conditions[3]; }
};

MarginLemmaReport check_margin_lemma(const Fraction& f);

}  // namespace satfrac
