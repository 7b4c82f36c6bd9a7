#include "knotforge/f2_matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "knotforge/error.hpp"

namespace knotforge {

F2SparseMatrix::F2SparseMatrix(std::size_t rows, std::vector<Column> columns)
    : rows_(rows), columns_(std::move(columns)) {
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    const Column& col = columns_[c];
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k] >= rows_ || (k > 0 && col[k - 1] >= col[k])) {
        raise(ErrorCode::InvalidArgument, "F2SparseMatrix column " + std::to_string(c) +
                                              " is not strictly increasing within range");
      }
    }
  }
}

std::size_t F2SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void F2SparseMatrix::flip(Index r, std::size_t c) {
  if (r >= rows_ || c >= columns_.size()) raise(ErrorCode::InvalidArgument, "F2SparseMatrix::flip out of range");
  Column& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r);
  if (it != col.end() && *it == r) {
    col.erase(it);
  } else {
    col.insert(it, r);
  }
}

bool F2SparseMatrix::get(Index r, std::size_t c) const {
  const Column& col = columns_.at(c);
  return std::binary_search(col.begin(), col.end(), r);
}

F2SparseMatrix F2SparseMatrix::transposed() const {
  std::vector<Column> out(rows_);
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (Index r : columns_[c]) out[r].push_back(static_cast<Index>(c));
  }
  return F2SparseMatrix(columns_.size(), std::move(out));
}

namespace {

using Word = std::uint64_t;

void xor_sparse(std::vector<F2SparseMatrix::Index>& acc, const std::vector<F2SparseMatrix::Index>& other,
                std::vector<F2SparseMatrix::Index>& scratch) {
  scratch.clear();
  std::set_symmetric_difference(acc.begin(), acc.end(), other.begin(), other.end(), std::back_inserter(scratch));
  acc.swap(scratch);
}

long highest_bit(const std::vector<Word>& bits) {
  for (std::size_t w = bits.size(); w-- > 0;) {
    if (bits[w] != 0) return static_cast<long>(w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(bits[w])));
  }
  return -1;
}

// Low-pivot column reduction. Reduced columns are kept until the stored
// density crosses kDensifyThreshold; after that every column lives in a
// bitset.
class Reducer {
 public:
  explicit Reducer(std::size_t rows) : rows_(rows), words_((rows + 63) / 64), pivot_owner_(rows, -1) {}

  void add(const F2SparseMatrix::Column& input) {
    if (dense_) {
      add_dense(to_bits(input));
      return;
    }
    std::vector<F2SparseMatrix::Index> col = input;
    while (!col.empty()) {
      const long owner = pivot_owner_[col.back()];
      if (owner < 0) {
        pivot_owner_[col.back()] = static_cast<long>(sparse_.size());
        stored_nonzeros_ += col.size();
        sparse_.push_back(std::move(col));
        maybe_densify();
        return;
      }
      xor_sparse(col, sparse_[static_cast<std::size_t>(owner)], scratch_);
    }
  }

  std::size_t rank() const { return dense_ ? dense_cols_.size() : sparse_.size(); }

 private:
  std::vector<Word> to_bits(const F2SparseMatrix::Column& col) const {
    std::vector<Word> bits(words_, 0);
    for (auto r : col) bits[r / 64] |= Word{1} << (r % 64);
    return bits;
  }

  void add_dense(std::vector<Word> bits) {
    for (;;) {
      const long low = highest_bit(bits);
      if (low < 0) return;
      const long owner = pivot_owner_[static_cast<std::size_t>(low)];
      if (owner < 0) {
        pivot_owner_[static_cast<std::size_t>(low)] = static_cast<long>(dense_cols_.size());
        dense_cols_.push_back(std::move(bits));
        return;
      }
      const auto& other = dense_cols_[static_cast<std::size_t>(owner)];
      const std::size_t upto = static_cast<std::size_t>(low) / 64;
      for (std::size_t w = 0; w <= upto; ++w) bits[w] ^= other[w];
    }
  }

  void maybe_densify() {
    const std::size_t stored = sparse_.size();
    if (stored < 32) return;
    const double density = static_cast<double>(stored_nonzeros_) / (static_cast<double>(rows_) * static_cast<double>(stored));
    if (density <= kDensifyThreshold) return;
    dense_ = true;
    dense_cols_.reserve(stored);
    for (const auto& col : sparse_) dense_cols_.push_back(to_bits(col));
    sparse_.clear();
    sparse_.shrink_to_fit();
  }

  std::size_t rows_;
  std::size_t words_;
  std::vector<long> pivot_owner_;
  bool dense_ = false;
  std::size_t stored_nonzeros_ = 0;
  std::vector<std::vector<F2SparseMatrix::Index>> sparse_;
  std::vector<std::vector<Word>> dense_cols_;
  std::vector<F2SparseMatrix::Index> scratch_;
};

}  // namespace

std::size_t f2_rank(const F2SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Reducer reducer(m.rows());
  for (const auto& col : m.columns()) {
    if (!col.empty()) reducer.add(col);
  }
  return reducer.rank();
}

F2SparseMatrix f2_multiply(const F2SparseMatrix& a, const F2SparseMatrix& b) {
  if (a.cols() != b.rows()) raise(ErrorCode::SizeMismatch, "f2_multiply");
  std::vector<F2SparseMatrix::Column> out(b.cols());
  std::vector<F2SparseMatrix::Index> scratch;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto& acc = out[c];
    for (auto k : b.column(c)) xor_sparse(acc, a.column(k), scratch);
  }
  return F2SparseMatrix(a.rows(), std::move(out));
}

}  // namespace knotforge
