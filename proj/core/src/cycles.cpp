#include "satfrac/cycles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "combinations.hpp"
#include "union_find.hpp"

namespace satfrac {

namespace {

// Vertices of the bipartite incidence graph: A-level a -> a-1, B-level b -> I+b-1.
std::size_t a_vertex(Point p) { return static_cast<std::size_t>(p.a - 1); }
std::size_t b_vertex(DesignSize size, Point p) {
  return static_cast<std::size_t>(size.a_levels() + p.b - 1);
}

int validate_k_cycle(const Fraction& f) {
  std::map<int, int> a_count;
  std::map<int, int> b_count;
  for (const Point& p : f.points()) {
    ++a_count[p.a];
    ++b_count[p.b];
  }
  const int k = static_cast<int>(a_count.size());
  if (k < 2 || static_cast<int>(b_count.size()) != k ||
      f.cardinality() != static_cast<std::size_t>(2 * k)) {
    throw std::invalid_argument("not a k-cycle: " + to_string(f) +
                                " must use k>=2 levels of each factor with 2k points");
  }
  auto twice = [](const auto& counts) {
    return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 2; });
  };
  if (!twice(a_count) || !twice(b_count)) {
    throw std::invalid_argument("not a k-cycle: " + to_string(f) +
                                " has a used level without exactly two replicates");
  }
  return k;
}

// Unassigned-neighbour lookup for the alternating walk: the two points of each
// used level.
struct LevelPairs {
  std::map<int, std::vector<Point>> by_a;
  std::map<int, std::vector<Point>> by_b;

  explicit LevelPairs(const Fraction& f) {
    for (const Point& p : f.points()) {
      by_a[p.a].push_back(p);
      by_b[p.b].push_back(p);
    }
  }
  Point row_partner(Point p) const {
    const auto& pair = by_a.at(p.a);
    return pair[0] == p ? pair[1] : pair[0];
  }
  Point column_partner(Point p) const {
    const auto& pair = by_b.at(p.b);
    return pair[0] == p ? pair[1] : pair[0];
  }
};

}  // namespace

KCycle::KCycle(Fraction points) : points_(std::move(points)), k_(validate_k_cycle(points_)) {}

int KCycle::components() const {
  detail::UnionFind uf(static_cast<std::size_t>(points_.size().a_levels() + points_.size().b_levels()));
  int merges = 0;
  for (const Point& p : points_.points()) merges += uf.unite(a_vertex(p), b_vertex(points_.size(), p));
  // A 2-regular graph on 2k vertices with c components has 2k - c tree edges.
  return 2 * k_ - merges;
}

std::optional<KCycle> find_cycle(const Fraction& f) {
  const DesignSize size = f.size();
  const std::size_t vertices = static_cast<std::size_t>(size.a_levels() + size.b_levels());
  // Adjacency as (neighbour, point index); points are sorted, so A-vertices see
  // B-levels ascending, and B-vertices see A-levels ascending.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(vertices);
  const auto pts = f.points();
  for (std::size_t e = 0; e < pts.size(); ++e) {
    adj[a_vertex(pts[e])].push_back({b_vertex(size, pts[e]), e});
    adj[b_vertex(size, pts[e])].push_back({a_vertex(pts[e]), e});
  }

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  for (std::size_t e = 0; e < pts.size(); ++e) {
    const std::size_t from = a_vertex(pts[e]);
    const std::size_t to = b_vertex(size, pts[e]);
    std::vector<std::size_t> via(vertices, none);
    std::vector<bool> seen(vertices, false);
    std::queue<std::size_t> frontier;
    frontier.push(from);
    seen[from] = true;
    while (!frontier.empty() && !seen[to]) {
      std::size_t v = frontier.front();
      frontier.pop();
      for (auto [w, edge] : adj[v]) {
        if (edge == e || seen[w]) continue;
        seen[w] = true;
        via[w] = edge;
        frontier.push(w);
      }
    }
    if (!seen[to]) continue;

    std::vector<Point> cycle{pts[e]};
    for (std::size_t v = to; v != from;) {
      const Point& p = pts[via[v]];
      cycle.push_back(p);
      v = (v == a_vertex(p)) ? b_vertex(size, p) : a_vertex(p);
    }
    return KCycle(Fraction(size, std::move(cycle)));
  }
  return std::nullopt;
}

bool contains_cycle(const Fraction& f) {
  detail::UnionFind uf(static_cast<std::size_t>(f.size().a_levels() + f.size().b_levels()));
  for (const Point& p : f.points()) {
    if (!uf.unite(a_vertex(p), b_vertex(f.size(), p))) return true;
  }
  return false;
}

OAPair decompose_cycle(const KCycle& c) {
  const Fraction& f = c.points();
  const LevelPairs pairs(f);
  std::vector<Point> first;
  std::vector<Point> second;
  std::vector<Point> assigned;

  auto is_assigned = [&](Point p) {
    return std::find(assigned.begin(), assigned.end(), p) != assigned.end();
  };

  for (const Point& start : f.points()) {
    if (is_assigned(start)) continue;
    Point p = start;
    bool to_first = true;
    bool row_step = true;
    while (!is_assigned(p)) {
      (to_first ? first : second).push_back(p);
      assigned.push_back(p);
      p = row_step ? pairs.row_partner(p) : pairs.column_partner(p);
      row_step = !row_step;
      to_first = !to_first;
    }
  }
  return {Fraction(f.size(), std::move(first)), Fraction(f.size(), std::move(second))};
}

bool is_orthogonal_array(const Fraction& f, int strength) {
  if (strength != 1 && strength != 2) {
    throw std::invalid_argument("unsupported orthogonal-array strength " + std::to_string(strength));
  }
  std::map<int, int> a_count;
  std::map<int, int> b_count;
  for (const Point& p : f.points()) {
    ++a_count[p.a];
    ++b_count[p.b];
  }
  auto uniform = [](const std::map<int, int>& counts) {
    return std::all_of(counts.begin(), counts.end(),
                       [&](const auto& kv) { return kv.second == counts.begin()->second; });
  };
  if (strength == 1) return uniform(a_count) && uniform(b_count);
  // Points are distinct, so each used level pair can occur at most once: the
  // fraction must be the full factorial on its used levels.
  return f.cardinality() == a_count.size() * b_count.size();
}

BigInt derangements(int k) {
  if (k < 0) throw std::invalid_argument("derangements of a negative count");
  if (k == 0) return 1;
  BigInt prev2 = 1;  // !0
  BigInt prev1 = 0;  // !1
  for (int n = 2; n <= k; ++n) {
    BigInt next = (n - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BigInt count_k_cycles(int k) {
  if (k < 2) throw std::invalid_argument("k-cycles need k >= 2, got " + std::to_string(k));
  return factorial(k) * derangements(k) / 2;
}

namespace {

// Places two points in each chosen row, never more than two per chosen column.
bool place_rows(DesignSize size, const std::vector<int>& rows, const std::vector<int>& cols,
                std::size_t row, std::vector<int>& col_use, std::vector<Point>& chosen,
                const std::function<bool(const KCycle&)>& visit) {
  if (row == rows.size()) return visit(KCycle(Fraction(size, chosen)));
  const std::size_t k = cols.size();
  for (std::size_t x = 0; x < k; ++x) {
    if (col_use[x] == 2) continue;
    for (std::size_t y = x + 1; y < k; ++y) {
      if (col_use[y] == 2) continue;
      ++col_use[x];
      ++col_use[y];
      chosen.push_back({rows[row], cols[x]});
      chosen.push_back({rows[row], cols[y]});
      const bool keep_going = place_rows(size, rows, cols, row + 1, col_use, chosen, visit);
      chosen.pop_back();
      chosen.pop_back();
      --col_use[x];
      --col_use[y];
      if (!keep_going) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_k_cycle(DesignSize size, int k, const std::function<bool(const KCycle&)>& visit) {
  if (k < 2 || k > std::min(size.a_levels(), size.b_levels())) {
    throw std::invalid_argument("k=" + std::to_string(k) + " out of range for a " +
                                std::to_string(size.a_levels()) + "x" +
                                std::to_string(size.b_levels()) + " design");
  }
  std::vector<int> rows = detail::first_combination(k);
  do {
    std::vector<int> cols = detail::first_combination(k);
    do {
      std::vector<int> col_use(static_cast<std::size_t>(k), 0);
      std::vector<Point> chosen;
      if (!place_rows(size, rows, cols, 0, col_use, chosen, visit)) return;
    } while (detail::next_combination(cols, size.b_levels()));
  } while (detail::next_combination(rows, size.a_levels()));
}

std::vector<KCycle> enumerate_k_cycles(DesignSize size, int k) {
  std::vector<KCycle> out;
  for_each_k_cycle(size, k, [&](const KCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

}  // namespace satfrac
