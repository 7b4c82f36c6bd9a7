#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "knotforge/laurent.hpp"

namespace knotforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Rational = boost::rational<std::int64_t>;

/// Integer polynomial in x, ascending coefficients.
using IntPolynomial = std::vector<BigInt>;

/// Rewrite a symmetric Laurent polynomial restricted to the unit circle as a
/// polynomial in x = cos(theta), using t^k + t^-k = 2*T_k(x).
IntPolynomial chebyshev_transform(const LaurentPoly& symmetric);

/// A real root of the circle polynomial, located in [lo, hi] inside [-1, 1].
struct CosineRoot {
  BigRational lo;
  BigRational hi;
  /// Set when the root is known exactly (lo == hi).
  bool exact = false;
  /// theta / pi for exact roots at x in {-1, -1/2, 0, 1/2}; these are the
  /// only rational cosines of rational multiples of pi in (-1, 1].
  std::optional<Rational> theta_over_pi;
};

/// Distinct roots of p in [-1, 1), i.e. every theta in (0, pi] with
/// p(cos theta) = 0, sorted by increasing theta. Roots are isolated with Sturm sequences on the square-free part and then
/// refined by sign-change bisection until the induced theta interval is
/// narrower than theta_tolerance.
std::vector<CosineRoot> isolate_cosine_roots(const IntPolynomial& p, double theta_tolerance = 1e-13);

/// Exact evaluation at a rational point.
BigRational evaluate(const IntPolynomial& p, const BigRational& x);

}  // namespace knotforge
