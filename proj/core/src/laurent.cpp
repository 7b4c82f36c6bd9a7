#include "knotforge/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge {

namespace checked {

LaurentPoly::Coeff add(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorCode::Overflow, "Laurent coefficient addition");
  return r;
}

LaurentPoly::Coeff sub(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) raise(ErrorCode::Overflow, "Laurent coefficient subtraction");
  return r;
}

LaurentPoly::Coeff mul(LaurentPoly::Coeff a, LaurentPoly::Coeff b) {
  LaurentPoly::Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorCode::Overflow, "Laurent coefficient product");
  return r;
}

}  // namespace checked

LaurentPoly::LaurentPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int low_exponent, std::vector<Coeff> coeffs)
    : low_(low_exponent), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exponent) { return LaurentPoly(exponent, {c}); }

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p += monomial(c, e);
  return p;
}

void LaurentPoly::trim() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly::Coeff LaurentPoly::coefficient(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Coeff>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

LaurentPoly::Coeff LaurentPoly::value_at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked::add(s, c);
  return s;
}

LaurentPoly::Coeff LaurentPoly::value_at_minus_one() const {
  Coeff s = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    s = (e % 2 == 0) ? checked::add(s, coeffs_[i]) : checked::sub(s, coeffs_[i]);
  }
  return s;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t) const {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + static_cast<double>(*it);
  return acc * std::pow(t, low_);
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  if (is_zero()) return {};
  std::vector<Coeff> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-max_degree(), std::move(rev));
}

bool LaurentPoly::is_symmetric() const { return *this == inverted(); }

LaurentPoly LaurentPoly::normalized_symmetric() const {
  if (is_zero()) return {};
  if (span() % 2 != 0) raise(ErrorCode::InvalidArgument, "cannot symmetrize odd span " + to_string());
  LaurentPoly p = shifted(-(min_degree() + max_degree()) / 2);
  const Coeff v = p.value_at_one();
  if (v < 0 || (v == 0 && p.leading_coefficient() < 0)) p = -p;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = checked::sub(0, c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(min_degree(), other.min_degree());
  const int hi = std::max(max_degree(), other.max_degree());
  std::vector<Coeff> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i + static_cast<std::size_t>(low_ - lo)] = coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    auto& slot = out[i + static_cast<std::size_t>(other.low_ - lo)];
    slot = checked::add(slot, other.coeffs_[i]);
  }
  low_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  if (is_zero() || other.is_zero()) return *this = LaurentPoly{};
  std::vector<Coeff> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = checked::add(out[i + j], checked::mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  low_ += other.low_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const Coeff c = *it;
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(coeffs_.rend() - it) - 1;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const Coeff mag = c < 0 ? -c : c;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

LaurentPoly parse_term(std::string_view term) {
  auto fail = [&] { raise(ErrorCode::ParseError, "bad Laurent term '" + std::string(term) + "'"); };
  if (term.empty()) fail();
  LaurentPoly::Coeff sign = 1;
  if (term.front() == '+' || term.front() == '-') {
    if (term.front() == '-') sign = -1;
    term.remove_prefix(1);
  }
  if (term.empty()) fail();
  LaurentPoly::Coeff coeff = 1;
  bool have_coeff = false;
  if (std::isdigit(static_cast<unsigned char>(term.front()))) {
    auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), coeff);
    if (ec != std::errc{}) fail();
    term.remove_prefix(static_cast<std::size_t>(ptr - term.data()));
    have_coeff = true;
  }
  int exponent = 0;
  if (!term.empty()) {
    if (have_coeff) {
      if (term.front() != '*') fail();
      term.remove_prefix(1);
    }
    if (term.empty() || term.front() != 't') fail();
    term.remove_prefix(1);
    exponent = 1;
    if (!term.empty()) {
      if (term.front() != '^') fail();
      term.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(term.data(), term.data() + term.size(), exponent);
      if (ec != std::errc{} || ptr != term.data() + term.size()) fail();
    }
  } else if (!have_coeff) {
    fail();
  }
  return LaurentPoly::monomial(checked::mul(sign, coeff), exponent);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) raise(ErrorCode::ParseError, "empty polynomial");
  LaurentPoly out;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= compact.size(); ++i) {
    const bool boundary = i == compact.size() ||
                          ((compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '^');
    if (!boundary) continue;
    out += parse_term(std::string_view(compact).substr(start, i - start));
    start = i;
  }
  return out;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) raise(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return {};
  // Work with ordinary polynomials A, B having nonzero constant terms.
  auto as_poly = [](const LaurentPoly& p) {
    std::vector<LaurentPoly::Coeff> c;
    for (int e = p.min_degree(); e <= p.max_degree(); ++e) c.push_back(p.coefficient(e));
    return c;
  };
  std::vector<LaurentPoly::Coeff> rem = as_poly(a);
  const std::vector<LaurentPoly::Coeff> den = as_poly(b);
  if (rem.size() < den.size()) {
    raise(ErrorCode::NotDivisible, a.to_string() + " by " + b.to_string());
  }
  std::vector<LaurentPoly::Coeff> quot(rem.size() - den.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const LaurentPoly::Coeff top = rem[k + den.size() - 1];
    if (top == 0) continue;
    if (top % den.back() != 0) raise(ErrorCode::NotDivisible, a.to_string() + " by " + b.to_string());
    const LaurentPoly::Coeff q = top / den.back();
    quot[k] = q;
    for (std::size_t j = 0; j < den.size(); ++j) rem[k + j] = checked::sub(rem[k + j], checked::mul(q, den[j]));
  }
  if (std::any_of(rem.begin(), rem.end(), [](auto c) { return c != 0; })) {
    raise(ErrorCode::NotDivisible, a.to_string() + " by " + b.to_string());
  }
  return LaurentPoly(a.min_degree() - b.min_degree(), std::move(quot));
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) raise(ErrorCode::SizeMismatch, "LaurentMatrix product");
  const std::size_t n = a.size();
  LaurentMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) raise(ErrorCode::SizeMismatch, "LaurentMatrix difference");
  LaurentMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

LaurentPoly laurent_det(const LaurentMatrix& input) {
  const std::size_t n = input.size();
  if (n > kMaxLaurentDetSize) raise(ErrorCode::InvalidArgument, "laurent_det limited to 64x64");
  if (n == 0) return 1;
  LaurentMatrix m = input;
  LaurentPoly prev_pivot = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Sylvester's identity guarantees the division is exact.
        m(i, j) = divide_exact(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev_pivot);
      }
      m(i, k) = LaurentPoly{};
    }
    prev_pivot = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace knotforge
