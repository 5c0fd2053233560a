#pragma once

// Exact integer linear algebra: dense Bareiss elimination and a sparse
// fraction-free eliminator. Nothing here touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace latvar {

using Integer = mpz_class;
using Rational = mpq_class;

class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Rank by fraction-free (Bareiss) row echelon reduction.
std::size_t bareiss_rank(IntMatrix m);

/// Determinant of a square matrix by Bareiss elimination. 0x0 gives 1.
Integer bareiss_determinant(IntMatrix m);

struct SparseEntry {
  std::size_t column;
  Integer value;
};

/// Nonzero entries sorted by column.
using SparseRow = std::vector<SparseEntry>;

/// Incremental row reduction over the integers. Each incoming row is reduced
/// against the stored pivot rows by integer combinations
/// row <- p * row - a * pivot, then divided by its content, so entries never
/// leave Z and stay small on the 0/+-1 matrices used here.
class SparseEliminator {
public:
  explicit SparseEliminator(std::size_t columns) : pivots_(columns) {}

  /// Leading column of the new pivot, or nullopt when the row depends on the
  /// rows added so far.
  std::optional<std::size_t> add_row(SparseRow row);

  std::size_t rank() const { return rank_; }

  /// Product of the row multipliers divided by the removed contents, in the
  /// order rows were reduced. Used for determinant tracking.
  const Rational& scale() const { return scale_; }

  /// Pivot rows indexed by leading column (empty when no pivot).
  const std::vector<SparseRow>& pivots() const { return pivots_; }

private:
  std::vector<SparseRow> pivots_;
  std::size_t rank_ = 0;
  Rational scale_ = 1;
};

/// Rank of a sparse matrix with the given column count.
std::size_t sparse_rank(const std::vector<SparseRow>& rows, std::size_t columns);

/// Determinant of an n x n sparse matrix.
Integer sparse_determinant(const std::vector<SparseRow>& rows, std::size_t n);

IntMatrix to_dense(const std::vector<SparseRow>& rows, std::size_t columns);

}  // namespace latvar
