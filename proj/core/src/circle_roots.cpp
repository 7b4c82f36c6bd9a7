#include "knotforge/circle_roots.hpp"

#include <algorithm>
#include <cmath>

#include "knotforge/error.hpp"

namespace knotforge {

namespace {

using RatPoly = std::vector<BigRational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly out(p.begin(), p.end());
  trim(out);
  return out;
}

BigRational eval(const RatPoly& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_of(const BigRational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  trim(d);
  return d;
}

// Returns {quotient, remainder}.
std::pair<RatPoly, RatPoly> divmod(RatPoly num, const RatPoly& den) {
  if (den.empty()) raise(ErrorCode::Internal, "polynomial division by zero");
  trim(num);
  if (num.size() < den.size()) return {RatPoly{}, num};
  RatPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const BigRational c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  trim(num);
  trim(q);
  return {q, num};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const BigRational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, derivative(p)};
  while (!seq.back().empty()) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().empty()) seq.pop_back();
  return seq;
}

int variations(const std::vector<RatPoly>& seq, const BigRational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& s : seq) {
    const int sg = sign_of(eval(s, x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++count;
    prev = sg;
  }
  return count;
}

double to_double(const BigRational& r) { return static_cast<double>(r); }

double theta_width(const BigRational& lo, const BigRational& hi) {
  const double a = std::acos(std::clamp(to_double(lo), -1.0, 1.0));
  const double b = std::acos(std::clamp(to_double(hi), -1.0, 1.0));
  return std::abs(a - b);
}

}  // namespace

IntPolynomial chebyshev_transform(const LaurentPoly& symmetric) {
  if (!symmetric.is_symmetric()) raise(ErrorCode::InvalidArgument, "chebyshev_transform needs a symmetric polynomial");
  const int deg = symmetric.max_degree();
  IntPolynomial out(static_cast<std::size_t>(std::max(deg, 0)) + 1, 0);
  // Chebyshev polynomials T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}.
  IntPolynomial prev{1};
  IntPolynomial cur{0, 1};
  out[0] += symmetric.coefficient(0);
  for (int k = 1; k <= deg; ++k) {
    const BigInt c = BigInt(symmetric.coefficient(k)) * 2;
    for (std::size_t j = 0; j < cur.size(); ++j) out[j] += c * cur[j];
    IntPolynomial next(cur.size() + 1, 0);
    for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] += 2 * cur[j];
    for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

BigRational evaluate(const IntPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

std::vector<CosineRoot> isolate_cosine_roots(const IntPolynomial& p, double theta_tolerance) {
  RatPoly poly = to_rat(p);
  if (poly.empty()) raise(ErrorCode::InvalidArgument, "zero polynomial has no isolated roots");
  std::vector<CosineRoot> roots;
  if (poly.size() == 1) return roots;

  // Square-free part: poly / gcd(poly, poly').
  RatPoly sqfree = divmod(poly, gcd(poly, derivative(poly))).first;

  auto deflate = [&](const BigRational& r) { sqfree = divmod(sqfree, RatPoly{-r, 1}).first; };

  // Exact roots at the special rational cosines.
  const std::pair<BigRational, Rational> specials[] = {
      {BigRational(-1), Rational(1)},
      {BigRational(-1, 2), Rational(2, 3)},
      {BigRational(0), Rational(1, 2)},
      {BigRational(1, 2), Rational(1, 3)},
  };
  for (const auto& [x, theta] : specials) {
    if (sqfree.size() > 1 && eval(sqfree, x) == 0) {
      roots.push_back(CosineRoot{x, x, true, theta});
      deflate(x);
    }
  }
  if (sqfree.size() > 1 && eval(sqfree, BigRational(1)) == 0) deflate(BigRational(1));

  // Sturm isolation on (-1, 1); a dyadic midpoint that happens to be a root
  // is recorded exactly and deflated, after which isolation restarts.
  struct Interval {
    BigRational lo, hi;
  };
  bool restart = true;
  std::vector<Interval> isolated;
  while (restart) {
    restart = false;
    isolated.clear();
    if (sqfree.size() <= 1) break;
    const auto seq = sturm_sequence(sqfree);
    auto count = [&](const BigRational& a, const BigRational& b) { return variations(seq, a) - variations(seq, b); };
    std::vector<std::pair<Interval, int>> stack;
    const int total = count(BigRational(-1), BigRational(1));
    if (total > 0) stack.push_back({Interval{BigRational(-1), BigRational(1)}, total});
    while (!stack.empty() && !restart) {
      auto [iv, n] = stack.back();
      stack.pop_back();
      if (n == 1) {
        isolated.push_back(iv);
        continue;
      }
      const BigRational mid = (iv.lo + iv.hi) / 2;
      if (eval(sqfree, mid) == 0) {
        roots.push_back(CosineRoot{mid, mid, true, std::nullopt});
        deflate(mid);
        restart = true;
        break;
      }
      const int left = count(iv.lo, mid);
      if (left > 0) stack.push_back({Interval{iv.lo, mid}, left});
      if (n - left > 0) stack.push_back({Interval{mid, iv.hi}, n - left});
    }
  }

  // Sign-change refinement; roots of the square-free part are simple.
  for (auto iv : isolated) {
    int sign_lo = sign_of(eval(sqfree, iv.lo));
    bool exact = false;
    for (int iter = 0; iter < 400 && theta_width(iv.lo, iv.hi) > theta_tolerance; ++iter) {
      const BigRational mid = (iv.lo + iv.hi) / 2;
      const int sm = sign_of(eval(sqfree, mid));
      if (sm == 0) {
        iv.lo = iv.hi = mid;
        exact = true;
        break;
      }
      if (sm == sign_lo) {
        iv.lo = mid;
      } else {
        iv.hi = mid;
      }
    }
    roots.push_back(CosineRoot{iv.lo, iv.hi, exact, std::nullopt});
  }
  std::sort(roots.begin(), roots.end(), [](const CosineRoot& a, const CosineRoot& b) { return a.lo > b.lo; });
  return roots;
}

}  // namespace knotforge
