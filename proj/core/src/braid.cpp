#include "knotforge/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge {

BraidWord::BraidWord(int strands, std::vector<int> word) : strands_(strands), word_(std::move(word)) {
  if (strands_ < 1) raise(ErrorCode::InvalidArgument, "braid needs at least one strand");
  if (strands_ > kMaxStrands) raise(ErrorCode::InvalidArgument, "braid has more than 65 strands");
  for (const int l : word_) {
    if (l == 0 || std::abs(l) >= strands_) {
      raise(ErrorCode::InvalidArgument,
            "letter " + std::to_string(l) + " invalid for " + std::to_string(strands_) + " strands");
    }
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  os << "(" << strands_ << ", [";
  for (std::size_t k = 0; k < word_.size(); ++k) os << (k ? "," : "") << word_[k];
  os << "])";
  return os.str();
}

int closure_components(const BraidWord& b) {
  std::vector<int> perm(static_cast<std::size_t>(b.strands()));
  std::iota(perm.begin(), perm.end(), 0);
  for (const int l : b.word()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

bool is_homogeneous(const BraidWord& b) {
  std::vector<int> sign(static_cast<std::size_t>(b.strands()), 0);
  for (const int l : b.word()) {
    const auto i = static_cast<std::size_t>(std::abs(l));
    const int s = l > 0 ? 1 : -1;
    if (sign[i] != 0 && sign[i] != s) return false;
    sign[i] = s;
  }
  for (int i = 1; i < b.strands(); ++i) {
    if (sign[static_cast<std::size_t>(i)] == 0) return false;
  }
  return true;
}

namespace {

void require_knot(const BraidWord& b) {
  const int c = closure_components(b);
  if (c != 1) raise(ErrorCode::NotAKnot, "closure of " + b.to_string() + " has " + std::to_string(c) + " components");
}

}  // namespace

BraidGenus seifert_genus(const BraidWord& b) {
  require_knot(b);
  const long twice = static_cast<long>(b.crossings()) - b.strands() + 1;
  if (twice % 2 != 0 || twice < 0) raise(ErrorCode::ParityError, "crossings - strands + 1 is odd for " + b.to_string());
  return BraidGenus{static_cast<int>(twice / 2), is_homogeneous(b)};
}

LaurentPoly burau_alexander(const BraidWord& b) {
  require_knot(b);
  const auto n = static_cast<std::size_t>(b.strands() - 1);
  if (n == 0) return LaurentPoly(1);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);
  LaurentMatrix m = LaurentMatrix::identity(n);
  for (const int l : b.word()) {
    const auto i = static_cast<std::size_t>(std::abs(l) - 1);
    LaurentMatrix g = LaurentMatrix::identity(n);
    if (l > 0) {
      g(i, i) = -t;
      if (i > 0) g(i - 1, i) = t;
      if (i + 1 < n) g(i + 1, i) = LaurentPoly(1);
    } else {
      g(i, i) = -t_inv;
      if (i > 0) g(i - 1, i) = LaurentPoly(1);
      if (i + 1 < n) g(i + 1, i) = t_inv;
    }
    m = m * g;
  }
  const LaurentPoly det = laurent_det(LaurentMatrix::identity(n) - m);
  const LaurentPoly one_minus_t = LaurentPoly(1) - t;
  const LaurentPoly one_minus_ts = LaurentPoly(1) - LaurentPoly::monomial(1, b.strands());
  const LaurentPoly delta = divide_exact(det * one_minus_t, one_minus_ts);
  return delta.normalized_symmetric();
}

SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
  const BraidGenus g = seifert_genus(b);
  const auto& w = b.word();
  const std::size_t len = w.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<std::size_t> next(len, kNone);
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t m = k + 1; m < len; ++m) {
      if (std::abs(w[m]) == std::abs(w[k])) {
        next[k] = m;
        break;
      }
    }
  }
  std::vector<std::size_t> loops;
  for (std::size_t k = 0; k < len; ++k) {
    if (next[k] != kNone) loops.push_back(k);
  }
  std::sort(loops.begin(), loops.end(), [&](std::size_t x, std::size_t y) {
    return std::make_pair(std::abs(w[x]), x) < std::make_pair(std::abs(w[y]), y);
  });
  std::vector<std::size_t> index(len, kNone);
  for (std::size_t a = 0; a < loops.size(); ++a) index[loops[a]] = a;
  if (loops.size() != static_cast<std::size_t>(2 * g.genus)) {
    raise(ErrorCode::Internal, "band cycle count does not match genus for " + b.to_string());
  }

  auto sgn = [](int l) { return l > 0 ? 1 : -1; };
  IntMatrix v(loops.size(), loops.size());
  for (const std::size_t k : loops) {
    const std::size_t a = index[k];
    const std::size_t h = next[k];
    v(a, a) = -(sgn(w[k]) + sgn(w[h])) / 2;
    // Cycle sharing the crossing at h.
    if (index[h] != kNone) {
      const int e = sgn(w[h]);
      v(a, index[h]) = (e + 1) / 2;
      v(index[h], a) = (e - 1) / 2;
    }
    // Interleaved cycles one generator up.
    for (const std::size_t m : loops) {
      if (std::abs(w[m]) != std::abs(w[k]) + 1) continue;
      const std::size_t hm = next[m];
      if (k < m && m < h && h < hm) {
        v(a, index[m]) = 1;
      } else if (m < k && k < hm && hm < h) {
        v(a, index[m]) = -1;
      }
    }
  }
  return SeifertMatrix(std::move(v));
}

}  // namespace knotforge
