#include "satfrac/markov.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

#include "combinations.hpp"

namespace satfrac {

Circuit::Circuit(DesignSize size, std::vector<int> a_levels, std::vector<int> b_levels)
    : size_(size), a_levels_(std::move(a_levels)), b_levels_(std::move(b_levels)) {
  if (a_levels_.size() != b_levels_.size() || a_levels_.size() < 2) {
    throw std::invalid_argument("a circuit needs k >= 2 levels of each factor");
  }
  auto distinct_in_range = [](std::vector<int> v, int hi) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end() && v.front() >= 1 && v.back() <= hi;
  };
  if (!distinct_in_range(a_levels_, size_.a_levels()) || !distinct_in_range(b_levels_, size_.b_levels())) {
    throw std::invalid_argument("circuit levels must be distinct and inside the design");
  }
}

Circuit Circuit::from_edge_list(DesignSize size, const std::vector<std::pair<int, int>>& edges) {
  if (edges.size() < 4 || edges.size() % 2 != 0) {
    throw std::invalid_argument("a circuit edge list needs an even number (>= 4) of edges");
  }
  std::vector<int> a;
  std::vector<int> b;
  for (std::size_t t = 0; t < edges.size(); t += 2) {
    const auto [i, j] = edges[t];          // (i_t, j_t)
    const auto [j_back, i_next] = edges[t + 1];  // (j_t, i_{t+1})
    if (j_back != j) throw std::invalid_argument("edge list is not an alternating closed path");
    if (!a.empty() && a.back() != i) throw std::invalid_argument("edge list is not an alternating closed path");
    if (a.empty()) a.push_back(i);
    b.push_back(j);
    if (t + 2 < edges.size()) {
      a.push_back(i_next);
    } else if (i_next != a.front()) {
      throw std::invalid_argument("edge list does not close");
    }
  }
  return Circuit(size, std::move(a), std::move(b));
}

std::vector<Point> Circuit::cells() const {
  const std::size_t k = a_levels_.size();
  std::vector<Point> out;
  out.reserve(2 * k);
  for (std::size_t t = 0; t < k; ++t) {
    out.push_back({a_levels_[t], b_levels_[t]});
    out.push_back({a_levels_[(t + 1) % k], b_levels_[t]});
  }
  return out;
}

Circuit Circuit::reversed() const {
  // Cells walked backwards from (i1,jk): a = (i1, ik, ..., i2), b = (jk, ..., j1).
  std::vector<int> a{a_levels_.front()};
  a.insert(a.end(), a_levels_.rbegin(), std::prev(a_levels_.rend()));
  std::vector<int> b(b_levels_.rbegin(), b_levels_.rend());
  return Circuit(size_, std::move(a), std::move(b));
}

MarkovMove::MarkovMove(DesignSize size, std::vector<std::int8_t> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(size_.cells())) {
    throw std::invalid_argument("move has the wrong number of entries");
  }
  for (std::int8_t v : entries_) {
    if (v < -1 || v > 1) throw std::invalid_argument("move entries must lie in {-1,0,1}");
  }
  for (int a = 1; a <= size_.a_levels(); ++a) {
    int sum = 0;
    for (int b = 1; b <= size_.b_levels(); ++b) sum += at(a, b);
    if (sum != 0) throw std::invalid_argument("move row " + std::to_string(a) + " does not sum to 0");
  }
  for (int b = 1; b <= size_.b_levels(); ++b) {
    int sum = 0;
    for (int a = 1; a <= size_.a_levels(); ++a) sum += at(a, b);
    if (sum != 0) throw std::invalid_argument("move column " + std::to_string(b) + " does not sum to 0");
  }
}

MarkovMove MarkovMove::negated() const {
  std::vector<std::int8_t> flipped(entries_.size());
  std::transform(entries_.begin(), entries_.end(), flipped.begin(),
                 [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
  return {size_, std::move(flipped)};
}

std::vector<Point> MarkovMove::support() const {
  std::vector<Point> out;
  for (int a = 1; a <= size_.a_levels(); ++a)
    for (int b = 1; b <= size_.b_levels(); ++b)
      if (at(a, b) != 0) out.push_back({a, b});
  return out;
}

std::ostream& operator<<(std::ostream& os, const MarkovMove& m) {
  for (int a = 1; a <= m.size().a_levels(); ++a) {
    for (int b = 1; b <= m.size().b_levels(); ++b) os << (b > 1 ? " " : "") << m.at(a, b);
    os << '\n';
  }
  return os;
}

MarkovMove circuit_to_move(const Circuit& c) {
  std::vector<std::int8_t> entries(static_cast<std::size_t>(c.size().cells()), 0);
  const auto cells = c.cells();
  for (std::size_t t = 0; t < cells.size(); ++t) {
    const Point p = cells[t];
    entries[static_cast<std::size_t>((p.a - 1) * c.size().b_levels() + (p.b - 1))] = t % 2 == 0 ? 1 : -1;
  }
  return {c.size(), std::move(entries)};
}

std::vector<Circuit> enumerate_circuits(DesignSize size, int max_degree) {
  const int limit = std::min(size.a_levels(), size.b_levels());
  if (max_degree == 0) max_degree = limit;
  if (max_degree < 2) throw std::invalid_argument("maximum circuit degree must be at least 2");
  max_degree = std::min(max_degree, limit);

  std::vector<Circuit> out;
  for (int k = 2; k <= max_degree; ++k) {
    std::vector<int> rows = detail::first_combination(k);
    do {
      std::vector<int> cols = detail::first_combination(k);
      do {
        std::vector<int> a_order = rows;
        do {
          std::vector<int> b_order = cols;
          do {
            if (b_order.front() < b_order.back()) out.emplace_back(size, a_order, b_order);
          } while (std::next_permutation(b_order.begin(), b_order.end()));
        } while (std::next_permutation(std::next(a_order.begin()), a_order.end()));
      } while (detail::next_combination(cols, size.b_levels()));
    } while (detail::next_combination(rows, size.a_levels()));
  }
  return out;
}

std::vector<MarkovMove> markov_basis(DesignSize size, int max_degree, std::uint64_t cap) {
  const int limit = std::min(size.a_levels(), size.b_levels());
  const int top = max_degree == 0 ? limit : std::min(max_degree, limit);
  // Circuits per k×k block: k! (k-1)! / 2.
  long double expected = 0;
  for (int k = 2; k <= top; ++k) {
    long double per_block = 0.5L;
    for (int t = 2; t <= k; ++t) per_block *= static_cast<long double>(t);
    for (int t = 2; t <= k - 1; ++t) per_block *= static_cast<long double>(t);
    long double blocks = 1;
    for (int t = 0; t < k; ++t) {
      blocks *= static_cast<long double>(size.a_levels() - t) / static_cast<long double>(t + 1);
      blocks *= static_cast<long double>(size.b_levels() - t) / static_cast<long double>(t + 1);
    }
    expected += blocks * per_block;
  }
  if (expected > static_cast<long double>(cap)) {
    throw CapExceeded("Markov basis would have about " + std::to_string(static_cast<double>(expected)) +
                      " moves, above the cap of " + std::to_string(cap));
  }
  std::vector<MarkovMove> basis;
  for (const Circuit& c : enumerate_circuits(size, max_degree)) basis.push_back(circuit_to_move(c));
  return basis;
}

std::optional<BinaryTable> apply_move(const BinaryTable& t, const MarkovMove& m, int sign) {
  if (t.size() != m.size()) throw std::invalid_argument("table and move shapes differ");
  if (sign != 1 && sign != -1) throw std::invalid_argument("move sign must be +1 or -1");
  const auto cur = t.entries();
  const auto delta = m.entries();
  std::vector<std::uint8_t> next(cur.size());
  for (std::size_t k = 0; k < cur.size(); ++k) {
    const int v = cur[k] + sign * delta[k];
    if (v < 0 || v > 1) return std::nullopt;
    next[k] = static_cast<std::uint8_t>(v);
  }
  return BinaryTable(t.size(), std::move(next));
}

namespace {

bool should_emit(std::uint64_t step, const WalkOptions& o) {
  return o.thin != 0 && step >= o.burn_in && (step - o.burn_in) % o.thin == 0;
}

BinaryTable run_chain(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                      const TableWeight* weight, const WalkOptions& options, const WalkVisitor& visit) {
  if (basis.empty()) throw std::invalid_argument("Markov basis is empty");
  for (const MarkovMove& m : basis) {
    if (m.size() != start.size()) throw std::invalid_argument("basis move shape differs from the table");
  }
  Rng rng(options.seed);
  BinaryTable state = start;
  double state_weight = 1.0;
  if (weight) {
    state_weight = (*weight)(state);
    if (!(state_weight > 0)) throw std::domain_error("target weight must be positive");
  }
  if (visit && should_emit(0, options)) visit(0, state);

  for (std::uint64_t step = 1; step <= options.steps; ++step) {
    const MarkovMove& m = basis[rng.below(basis.size())];
    const int sign = rng.below(2) == 0 ? 1 : -1;
    if (auto proposal = apply_move(state, m, sign)) {
      bool accept = true;
      if (weight) {
        const double w = (*weight)(*proposal);
        if (!(w > 0)) throw std::domain_error("target weight must be positive");
        const double ratio = w / state_weight;
        if (ratio < 1.0) accept = rng.unit() < ratio;
        if (accept) state_weight = w;
      }
      if (accept) state = std::move(*proposal);
    }
    if (visit && should_emit(step, options)) visit(step, state);
  }
  return state;
}

}  // namespace

BinaryTable random_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                        std::uint64_t steps, std::uint64_t seed) {
  return run_chain(start, basis, nullptr, WalkOptions{steps, seed, 0, 0}, {});
}

BinaryTable random_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                        const WalkOptions& options, const WalkVisitor& visit) {
  return run_chain(start, basis, nullptr, options, visit);
}

BinaryTable metropolis_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                            const TableWeight& weight, std::uint64_t steps, std::uint64_t seed) {
  return run_chain(start, basis, &weight, WalkOptions{steps, seed, 0, 0}, {});
}

BinaryTable metropolis_walk(const BinaryTable& start, const std::vector<MarkovMove>& basis,
                            const TableWeight& weight, const WalkOptions& options,
                            const WalkVisitor& visit) {
  return run_chain(start, basis, &weight, options, visit);
}

namespace {

struct FiberSearch {
  DesignSize size;
  const Margins& margins;
  std::uint64_t cap;
  std::vector<int> col_left;
  std::vector<std::uint8_t> entries;
  std::vector<BinaryTable> out;

  void row(int a) {
    if (a > size.a_levels()) {
      if (out.size() >= cap) {
        throw CapExceeded("fiber has more than " + std::to_string(cap) + " tables");
      }
      out.emplace_back(size, entries);
      return;
    }
    const int rows_after = size.a_levels() - a;
    place(a, 1, margins.a[static_cast<std::size_t>(a - 1)], rows_after);
  }

  // Fill row a from column b on, with `need` ones still to place.
  void place(int a, int b, int need, int rows_after) {
    if (b > size.b_levels()) {
      if (need != 0) return;
      // Every column must still be completable by the rows below.
      for (int left : col_left)
        if (left > rows_after) return;
      row(a + 1);
      return;
    }
    const int cols_after = size.b_levels() - b;
    const std::size_t cell = static_cast<std::size_t>((a - 1) * size.b_levels() + (b - 1));
    int& left = col_left[static_cast<std::size_t>(b - 1)];
    if (need > 0 && left > 0) {
      --left;
      entries[cell] = 1;
      place(a, b + 1, need - 1, rows_after);
      entries[cell] = 0;
      ++left;
    }
    if (need <= cols_after) place(a, b + 1, need, rows_after);
  }
};

}  // namespace

std::vector<BinaryTable> fiber_enumerate(const Margins& m, DesignSize size, std::uint64_t cap) {
  if (m.a.size() != static_cast<std::size_t>(size.a_levels()) ||
      m.b.size() != static_cast<std::size_t>(size.b_levels())) {
    throw std::invalid_argument("margin lengths do not match the design size");
  }
  auto in_range = [](const std::vector<int>& v, int hi) {
    return std::all_of(v.begin(), v.end(), [hi](int x) { return x >= 0 && x <= hi; });
  };
  if (!in_range(m.a, size.b_levels()) || !in_range(m.b, size.a_levels()) ||
      std::accumulate(m.a.begin(), m.a.end(), 0) != std::accumulate(m.b.begin(), m.b.end(), 0)) {
    return {};
  }
  FiberSearch search{size, m, cap, m.b, std::vector<std::uint8_t>(static_cast<std::size_t>(size.cells()), 0), {}};
  search.row(1);
  // Ones are tried before zeros, so reverse to get ascending order.
  std::reverse(search.out.begin(), search.out.end());
  return std::move(search.out);
}

bool verify_connectivity(const Margins& m, DesignSize size, const std::vector<MarkovMove>& basis,
                         std::uint64_t cap) {
  const std::vector<BinaryTable> fiber = fiber_enumerate(m, size, cap);
  if (fiber.size() <= 1) return true;
  std::set<BinaryTable> seen{fiber.front()};
  std::queue<BinaryTable> frontier;
  frontier.push(fiber.front());
  while (!frontier.empty()) {
    BinaryTable t = std::move(frontier.front());
    frontier.pop();
    for (const MarkovMove& move : basis) {
      for (int sign : {1, -1}) {
        if (auto next = apply_move(t, move, sign); next && seen.insert(*next).second) {
          frontier.push(std::move(*next));
        }
      }
    }
  }
  return seen.size() == fiber.size();
}

}  // namespace satfrac
