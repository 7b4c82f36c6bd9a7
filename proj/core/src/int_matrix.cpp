#include "knotforge/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "knotforge/error.hpp"

namespace knotforge {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) raise(ErrorCode::SizeMismatch, "IntMatrix entry count");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Entry>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) raise(ErrorCode::SizeMismatch, "ragged IntMatrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Entry>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Entry> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) raise(ErrorCode::SizeMismatch, "ragged IntMatrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return IntMatrix(r, c, std::move(data));
}

std::vector<std::vector<IntMatrix::Entry>> IntMatrix::to_rows() const {
  std::vector<std::vector<Entry>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) raise(ErrorCode::SizeMismatch, "IntMatrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = checked::add(out(i, j), checked::mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(ErrorCode::SizeMismatch, "IntMatrix sum");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    out(i / a.cols(), i % a.cols()) = checked::add(a.data()[i], b.data()[i]);
  }
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) raise(ErrorCode::SizeMismatch, "IntMatrix difference");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    out(i / a.cols(), i % a.cols()) = checked::sub(a.data()[i], b.data()[i]);
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix::Entry int_det(const IntMatrix& input) {
  if (!input.is_square()) raise(ErrorCode::SizeMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  IntMatrix::Entry prev = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = checked::sub(checked::mul(m(k, k), m(i, j)), checked::mul(m(i, k), m(k, j))) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

LaurentMatrix pencil(const IntMatrix& v, const LaurentPoly& a, const LaurentPoly& b) {
  if (!v.is_square()) raise(ErrorCode::SizeMismatch, "pencil of a non-square matrix");
  LaurentMatrix m(v.rows());
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < v.cols(); ++j) m(i, j) = a * LaurentPoly(v(i, j)) + b * LaurentPoly(v(j, i));
  }
  return m;
}

}  // namespace knotforge
