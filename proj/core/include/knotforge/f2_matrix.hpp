#pragma once

#include <cstdint>
#include <vector>

namespace knotforge {

/// Sparse matrix over the two-element field stored by columns. Each column
/// lists the row indices of its nonzero entries in strictly increasing
/// order.
class F2SparseMatrix {
 public:
  using Index = std::uint32_t;
  using Column = std::vector<Index>;

  F2SparseMatrix() = default;
  F2SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  /// Validates the column invariants; raises InvalidArgument on violation.
  F2SparseMatrix(std::size_t rows, std::vector<Column> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_[c]; }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  std::size_t nonzeros() const noexcept;

  /// Toggle entry (r, c); keeps the column sorted.
  void flip(Index r, std::size_t c);
  bool get(Index r, std::size_t c) const;

  F2SparseMatrix transposed() const;

  friend bool operator==(const F2SparseMatrix&, const F2SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Column-elimination threshold at which the reducer switches from sorted
/// index lists to machine-word bitsets.
inline constexpr double kDensifyThreshold = 0.05;

/// Rank over the two-element field. Works on a private copy of the columns.
std::size_t f2_rank(const F2SparseMatrix& m);

inline std::size_t f2_nullity(const F2SparseMatrix& m) { return m.cols() - f2_rank(m); }

/// Product a*b over the two-element field (used for the d^2 = 0 check).
F2SparseMatrix f2_multiply(const F2SparseMatrix& a, const F2SparseMatrix& b);

}  // namespace knotforge
