#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "knotforge/laurent.hpp"

namespace knotforge {

/// Small dense integer matrix, row-major.
class IntMatrix {
 public:
  using Entry = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> data);
  IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Entry>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Entry& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Entry operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<Entry>& data() const noexcept { return data_; }
  std::vector<std::vector<Entry>> to_rows() const;

  IntMatrix transposed() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

/// Exact integer determinant (Bareiss). Empty matrix gives 1.
IntMatrix::Entry int_det(const IntMatrix& m);

/// a*V + b*V^T as a Laurent matrix, for V square.
LaurentMatrix pencil(const IntMatrix& v, const LaurentPoly& a, const LaurentPoly& b);

}  // namespace knotforge
