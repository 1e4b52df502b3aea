#include "satfrac/saturation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "satfrac/cycles.hpp"
#include "satfrac/errors.hpp"
#include "union_find.hpp"

namespace satfrac {

namespace {

void validate_margins(const Margins& m) {
  const int rows = static_cast<int>(m.a.size());
  const int cols = static_cast<int>(m.b.size());
  DesignSize size(rows, cols);
  const int want = size.parameters();
  auto positive = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
  };
  if (!positive(m.a) || !positive(m.b)) {
    throw std::invalid_argument("saturated margins must all be at least 1");
  }
  const int sum_a = std::accumulate(m.a.begin(), m.a.end(), 0);
  const int sum_b = std::accumulate(m.b.begin(), m.b.end(), 0);
  if (sum_a != want || sum_b != want) {
    throw std::invalid_argument("saturated margins must sum to I+J-1 = " + std::to_string(want) +
                                ", got " + std::to_string(sum_a) + " and " + std::to_string(sum_b));
  }
}

// n! / prod((parts_k - 1)!)
BigInt multinomial_of_excess(int n, const std::vector<int>& parts) {
  BigInt out = factorial(n);
  for (int x : parts) out /= factorial(x - 1);
  return out;
}

BigInt power(int base, int exp) {
  BigInt out = 1;
  for (int k = 0; k < exp; ++k) out *= base;
  return out;
}

// Compositions of `total` into `parts` positive integers, lexicographic.
void for_each_composition(int total, int parts, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 1) {
      current.push_back(left);
      visit(current);
      current.pop_back();
      return;
    }
    for (int x = 1; x <= left - (slots - 1); ++x) {
      current.push_back(x);
      rec(left - x, slots - 1);
      current.pop_back();
    }
  };
  rec(total, parts);
}

// Active sub-design during peel-off generation: original level indices with
// their remaining margins.
struct Level {
  int index;
  int margin;
};

bool peel(std::vector<Level> rows, std::vector<Level> cols, std::vector<Point>& chosen,
          DesignSize size, const std::function<bool(const Fraction&)>& visit) {
  if (rows.size() == 1 || cols.size() == 1) {
    // A single level on one side is joined to every level on the other.
    const std::size_t base = chosen.size();
    for (const Level& r : rows)
      for (const Level& c : cols) chosen.push_back({r.index, c.index});
    bool keep_going = visit(Fraction(size, chosen));
    chosen.resize(base);
    return keep_going;
  }

  const bool peel_row = rows.size() >= cols.size();
  std::vector<Level>& leaves = peel_row ? rows : cols;
  std::vector<Level>& hubs = peel_row ? cols : rows;
  auto leaf = std::find_if(leaves.rbegin(), leaves.rend(), [](const Level& l) { return l.margin == 1; });
  // Always present on the longer side: its margins sum to fewer than twice its length.
  const int leaf_index = leaf->index;
  leaves.erase(std::next(leaf).base());

  for (Level& hub : hubs) {
    if (hub.margin < 2) continue;
    --hub.margin;
    chosen.push_back(peel_row ? Point{leaf_index, hub.index} : Point{hub.index, leaf_index});
    bool keep_going = peel(rows, cols, chosen, size, visit);
    chosen.pop_back();
    ++hub.margin;
    if (!keep_going) return false;
  }
  return true;
}

bool spanning_trees(const std::vector<Point>& edges, std::size_t next, std::vector<Point>& chosen,
                    const std::vector<std::size_t>& component, DesignSize size,
                    const std::function<bool(const Fraction&)>& visit) {
  const std::size_t vertices = component.size();
  if (chosen.size() + 1 == vertices) return visit(Fraction(size, chosen));
  if (next == edges.size()) return true;

  const Point e = edges[next];
  const std::size_t u = static_cast<std::size_t>(e.a - 1);
  const std::size_t v = static_cast<std::size_t>(size.a_levels() + e.b - 1);

  if (component[u] != component[v]) {
    std::vector<std::size_t> merged = component;
    const std::size_t from = component[v];
    for (std::size_t& c : merged)
      if (c == from) c = component[u];
    chosen.push_back(e);
    bool keep_going = spanning_trees(edges, next + 1, chosen, merged, size, visit);
    chosen.pop_back();
    if (!keep_going) return false;
  }

  // Skipping e is allowed only if the chosen edges plus the undecided ones
  // still connect every vertex.
  detail::UnionFind uf(vertices);
  std::size_t pieces = vertices;
  for (std::size_t x = 0; x < vertices; ++x) pieces -= uf.unite(x, component[x]);
  for (std::size_t k = next + 1; k < edges.size() && pieces > 1; ++k) {
    pieces -= uf.unite(static_cast<std::size_t>(edges[k].a - 1),
                       static_cast<std::size_t>(size.a_levels() + edges[k].b - 1));
  }
  if (pieces > 1) return true;
  return spanning_trees(edges, next + 1, chosen, component, size, visit);
}

}  // namespace

bool is_saturated(const Fraction& f) {
  return f.cardinality() == static_cast<std::size_t>(f.size().parameters()) && !contains_cycle(f);
}

BigInt count_with_margins(const Margins& m) {
  validate_margins(m);
  const int rows = static_cast<int>(m.a.size());
  const int cols = static_cast<int>(m.b.size());
  return multinomial_of_excess(rows - 1, m.b) * multinomial_of_excess(cols - 1, m.a);
}

BigInt count_saturated(DesignSize size) {
  return power(size.a_levels(), size.b_levels() - 1) * power(size.b_levels(), size.a_levels() - 1);
}

SaturatedCount saturated_count_table(DesignSize size) {
  SaturatedCount out;
  const int total = size.parameters();
  std::vector<std::vector<int>> a_side;
  std::vector<std::vector<int>> b_side;
  for_each_composition(total, size.a_levels(), [&](const std::vector<int>& v) { a_side.push_back(v); });
  for_each_composition(total, size.b_levels(), [&](const std::vector<int>& v) { b_side.push_back(v); });
  for (const auto& a : a_side) {
    for (const auto& b : b_side) {
      Margins m{a, b};
      BigInt n = count_with_margins(m);
      out.total += n;
      out.by_margins.emplace(std::move(m), std::move(n));
    }
  }
  return out;
}

Rational saturation_probability(DesignSize size) {
  return Rational(count_saturated(size), binomial(size.cells(), size.parameters()));
}

void for_each_with_margins(const Margins& m, const std::function<bool(const Fraction&)>& visit) {
  validate_margins(m);
  const DesignSize size(static_cast<int>(m.a.size()), static_cast<int>(m.b.size()));
  std::vector<Level> rows;
  std::vector<Level> cols;
  for (std::size_t k = 0; k < m.a.size(); ++k) rows.push_back({static_cast<int>(k) + 1, m.a[k]});
  for (std::size_t k = 0; k < m.b.size(); ++k) cols.push_back({static_cast<int>(k) + 1, m.b[k]});
  std::vector<Point> chosen;
  peel(std::move(rows), std::move(cols), chosen, size, visit);
}

std::vector<Fraction> generate_with_margins(const Margins& m) {
  std::vector<Fraction> out;
  for_each_with_margins(m, [&](const Fraction& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

void for_each_saturated(DesignSize size, const std::function<bool(const Fraction&)>& visit,
                        std::uint64_t cap) {
  const BigInt total = count_saturated(size);
  if (total > cap) {
    throw CapExceeded(std::to_string(size.a_levels()) + "x" + std::to_string(size.b_levels()) +
                      " has " + total.str() + " saturated fractions, above the cap of " +
                      std::to_string(cap));
  }
  const Fraction all = Fraction::full(size);
  const std::vector<Point> edges(all.points().begin(), all.points().end());
  std::vector<std::size_t> component(static_cast<std::size_t>(size.a_levels() + size.b_levels()));
  std::iota(component.begin(), component.end(), std::size_t{0});
  std::vector<Point> chosen;
  spanning_trees(edges, 0, chosen, component, size, visit);
}

std::vector<Fraction> enumerate_saturated(DesignSize size, std::uint64_t cap) {
  std::vector<Fraction> out;
  for_each_saturated(
      size,
      [&](const Fraction& f) {
        out.push_back(f);
        return true;
      },
      cap);
  return out;
}

Fraction sample_uniform_saturated(DesignSize size, Rng& rng) {
  const std::size_t rows = static_cast<std::size_t>(size.a_levels());
  const std::size_t vertices = rows + static_cast<std::size_t>(size.b_levels());
  std::vector<bool> in_tree(vertices, false);
  std::vector<std::size_t> next(vertices, 0);
  in_tree[0] = true;

  auto random_neighbour = [&](std::size_t v) -> std::size_t {
    if (v < rows) return rows + rng.below(static_cast<std::uint64_t>(size.b_levels()));
    return rng.below(static_cast<std::uint64_t>(size.a_levels()));
  };

  std::vector<Point> edges;
  edges.reserve(vertices - 1);
  for (std::size_t start = 1; start < vertices; ++start) {
    // Loop-erased walk: overwriting next[] erases loops implicitly.
    for (std::size_t v = start; !in_tree[v]; v = next[v]) next[v] = random_neighbour(v);
    for (std::size_t v = start; !in_tree[v]; v = next[v]) {
      in_tree[v] = true;
      const std::size_t w = next[v];
      edges.push_back(v < rows ? Point{static_cast<int>(v) + 1, static_cast<int>(w - rows) + 1}
                               : Point{static_cast<int>(w) + 1, static_cast<int>(v - rows) + 1});
    }
  }
  return {size, std::move(edges)};
}

Fraction sample_uniform_saturated(DesignSize size, std::uint64_t seed) {
  Rng rng(seed);
  return sample_uniform_saturated(size, rng);
}

MarginLemmaReport check_margin_lemma(const Fraction& f) {
  MarginLemmaReport report;
  const DesignSize size = f.size();
  report.square = size.a_levels() == size.b_levels();
  report.saturated = is_saturated(f);
  const Margins m = margins(f);
  const int want = size.parameters();
  report.conditions[0] = std::accumulate(m.a.begin(), m.a.end(), 0) == want &&
                         std::accumulate(m.b.begin(), m.b.end(), 0) == want;
  auto all_positive = [](const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
  };
  auto has_one = [](const std::vector<int>& v) { return std::find(v.begin(), v.end(), 1) != v.end(); };
  report.conditions[1] = all_positive(m.a) && all_positive(m.b);
  report.conditions[2] = has_one(m.a) && has_one(m.b);
  bool leaf_rule = true;
  for (const Point& p : f.points()) {
    if (m.a[static_cast<std::size_t>(p.a - 1)] == 1 && m.b[static_cast<std::size_t>(p.b - 1)] <= 1) {
      leaf_rule = false;
    }
  }
  report.conditions[3] = leaf_rule;
  return report;
}

}  // namespace satfrac
