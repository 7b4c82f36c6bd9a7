#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotforge {

/// Integer Laurent polynomial in one variable t.
///
/// Stored densely from the lowest to the highest exponent with both ends
/// trimmed, so the zero polynomial has no coefficients at all and every
/// polynomial has a unique representation. Arithmetic is exact; any int64
/// overflow raises ErrorCode::Overflow instead of wrapping.
class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int low_exponent, std::vector<Coeff> coeffs);

  static LaurentPoly monomial(Coeff c, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  /// Build from (exponent, coefficient) pairs; repeated exponents add up.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Coeff>>& terms);
  /// Parse the format produced by to_string(), e.g. "-2*t + 5 - 2*t^-1".
  static LaurentPoly parse(std::string_view text);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest / highest exponent with a nonzero coefficient (0 for zero).
  int min_degree() const noexcept { return low_; }
  int max_degree() const noexcept {
    return coeffs_.empty() ? 0 : low_ + static_cast<int>(coeffs_.size()) - 1;
  }
  int span() const noexcept { return max_degree() - min_degree(); }
  Coeff coefficient(int exponent) const noexcept;
  Coeff leading_coefficient() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Coeff trailing_coefficient() const noexcept { return coeffs_.empty() ? 0 : coeffs_.front(); }

  /// Nonzero terms only, ascending exponent.
  std::vector<std::pair<int, Coeff>> terms() const;

  Coeff value_at_one() const;
  Coeff value_at_minus_one() const;
  std::complex<double> evaluate(std::complex<double> t) const;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// Substitute t -> t^-1.
  LaurentPoly inverted() const;
  /// Shift to symmetric exponent range and fix the sign so the value at t=1
  /// is positive. Requires an even span; a zero value at 1 keeps the sign of
  /// the leading coefficient positive instead.
  LaurentPoly normalized_symmetric() const;
  bool is_symmetric() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// Exact quotient a / b in Z[t, t^-1]. Raises NotDivisible when b does not
/// divide a with integer coefficients, InvalidArgument when b is zero.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

namespace checked {
LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff sub(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b);
}  // namespace checked

/// Square matrix of Laurent polynomials, row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static LaurentMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

inline constexpr std::size_t kMaxLaurentDetSize = 64;

/// Exact determinant by fraction-free (Bareiss) elimination. The empty
/// matrix has determinant 1.
LaurentPoly laurent_det(const LaurentMatrix& m);

}  // namespace knotforge
