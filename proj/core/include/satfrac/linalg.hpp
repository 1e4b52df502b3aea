#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "satfrac/design.hpp"

namespace satfrac {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::int64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Model matrix of the simple-effect model. Columns are ordered
/// (m0, a_1..a_{I-1}, b_1..b_{J-1}); one row per design point.
struct ModelMatrix {
  DesignSize size;
  std::vector<Point> row_points;
  IntMatrix values;
};

/// Row of the model matrix for a single point.
std::vector<std::int64_t> model_row(DesignSize size, Point p);

/// X for the full factorial, rows in lexicographic point order.
ModelMatrix build_full_model_matrix(DesignSize size);

/// Rows of x selected at the points of f, in f's order.
/// Throws std::invalid_argument if f was built on a different design or a
/// point of f has no row in x.
ModelMatrix restrict(const ModelMatrix& x, const Fraction& f);

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Throws std::invalid_argument for non-square input and std::overflow_error if
/// an intermediate leaves the int64 range.
std::int64_t integer_determinant(const IntMatrix& m);

/// Rank over the rationals, computed with fraction-free elimination.
std::size_t integer_rank(const IntMatrix& m);

/// #f == I+J-1 and det(X_F) != 0.
bool is_saturated_by_determinant(const Fraction& f);

}  // namespace satfrac
