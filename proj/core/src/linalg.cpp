#include "satfrac/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace satfrac {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_mul_overflow(x, y, &out)) throw std::overflow_error("determinant overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_sub_overflow(x, y, &out)) throw std::overflow_error("determinant overflow");
  return out;
}

// In-place Bareiss elimination. Returns the rank; `sign` tracks row swaps and
// the last nonzero pivot is left in `last_pivot`.
std::size_t bareiss(IntMatrix& m, int& sign, std::int64_t& last_pivot) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::int64_t prev = 1;
  std::size_t rank = 0;
  sign = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(rank, c));
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        // Exact by Sylvester's identity.
        m(r, c) = checked_sub(checked_mul(m(r, c), m(rank, col)), checked_mul(m(r, col), m(rank, c))) /
                  prev;
      }
      m(r, col) = 0;
    }
    prev = m(rank, col);
    ++rank;
  }
  last_pivot = prev;
  return rank;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

std::vector<std::int64_t> model_row(DesignSize size, Point p) {
  std::vector<std::int64_t> row(static_cast<std::size_t>(size.parameters()), 0);
  row[0] = 1;
  if (p.a < size.a_levels()) row[static_cast<std::size_t>(p.a)] = 1;
  if (p.b < size.b_levels()) row[static_cast<std::size_t>(size.a_levels() - 1 + p.b)] = 1;
  return row;
}

ModelMatrix build_full_model_matrix(DesignSize size) {
  Fraction all = Fraction::full(size);
  IntMatrix values(all.cardinality(), static_cast<std::size_t>(size.parameters()));
  std::size_t r = 0;
  for (const Point& p : all.points()) {
    auto row = model_row(size, p);
    for (std::size_t c = 0; c < row.size(); ++c) values(r, c) = row[c];
    ++r;
  }
  return {size, {all.points().begin(), all.points().end()}, std::move(values)};
}

ModelMatrix restrict(const ModelMatrix& x, const Fraction& f) {
  if (f.size() != x.size) throw std::invalid_argument("fraction and model matrix use different designs");
  IntMatrix values(f.cardinality(), x.values.cols());
  std::size_t r = 0;
  for (const Point& p : f.points()) {
    std::size_t src = x.row_points.size();
    for (std::size_t k = 0; k < x.row_points.size(); ++k) {
      if (x.row_points[k] == p) {
        src = k;
        break;
      }
    }
    if (src == x.row_points.size()) {
      throw std::invalid_argument("point " + to_string(p) + " has no row in the model matrix");
    }
    for (std::size_t c = 0; c < values.cols(); ++c) values(r, c) = x.values(src, c);
    ++r;
  }
  return {x.size, {f.points().begin(), f.points().end()}, std::move(values)};
}

std::int64_t integer_determinant(const IntMatrix& m) {
  if (!m.square()) {
    throw std::invalid_argument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + " matrix");
  }
  if (m.rows() == 0) return 1;
  IntMatrix work = m;
  int sign = 1;
  std::int64_t pivot = 1;
  if (bareiss(work, sign, pivot) < m.rows()) return 0;
  return sign * pivot;
}

std::size_t integer_rank(const IntMatrix& m) {
  IntMatrix work = m;
  int sign = 1;
  std::int64_t pivot = 1;
  return bareiss(work, sign, pivot);
}

bool is_saturated_by_determinant(const Fraction& f) {
  const DesignSize size = f.size();
  if (f.cardinality() != static_cast<std::size_t>(size.parameters())) return false;
  IntMatrix xf(f.cardinality(), f.cardinality());
  std::size_t r = 0;
  for (const Point& p : f.points()) {
    auto row = model_row(size, p);
    for (std::size_t c = 0; c < row.size(); ++c) xf(r, c) = row[c];
    ++r;
  }
  return integer_determinant(xf) != 0;
}

}  // namespace satfrac
