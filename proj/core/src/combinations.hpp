#pragma once

#include <vector>

namespace satfrac::detail {

// Lexicographic k-subsets of {1..n}.
inline std::vector<int> first_combination(int k) {
  std::vector<int> comb(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) comb[static_cast<std::size_t>(t)] = t + 1;
  return comb;
}

inline bool next_combination(std::vector<int>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  for (int pos = k - 1; pos >= 0; --pos) {
    if (comb[static_cast<std::size_t>(pos)] < n - (k - 1 - pos)) {
      ++comb[static_cast<std::size_t>(pos)];
      for (int t = pos + 1; t < k; ++t)
        comb[static_cast<std::size_t>(t)] = comb[static_cast<std::size_t>(t - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace satfrac::detail
