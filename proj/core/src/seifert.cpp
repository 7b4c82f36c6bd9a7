#include "knotforge/seifert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "knotforge/error.hpp"

namespace knotforge {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
  if (!v_.is_square()) raise(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must be square");
  if (v_.rows() % 2 != 0) raise(ErrorCode::InvalidSeifertMatrix, "Seifert matrix must have even size");
  if (v_.rows() > kMaxSignatureSize) raise(ErrorCode::InvalidSeifertMatrix, "Seifert matrix larger than 64");
  if (v_.rows() == 0) return;
  const auto d = int_det(v_ - v_.transposed());
  if (d != 1) {
    raise(ErrorCode::InvalidSeifertMatrix, "det(V - V^T) = " + std::to_string(d) + ", expected 1");
  }
}

LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
  if (v.size() == 0) return LaurentPoly(1);
  const LaurentPoly delta = laurent_det(pencil(v.matrix(), LaurentPoly(1), -LaurentPoly::t()));
  LaurentPoly out = delta.normalized_symmetric();
  if (out.value_at_one() != 1) raise(ErrorCode::InvalidSeifertMatrix, "Delta(1) != +-1");
  return out;
}

std::vector<Jump> circle_jumps(const LaurentPoly& alexander) {
  std::vector<Jump> upper;
  for (const auto& root : isolate_cosine_roots(chebyshev_transform(alexander))) {
    Jump j{};
    const double lo = static_cast<double>(root.lo);
    const double hi = static_cast<double>(root.hi);
    j.theta_lo = std::acos(std::clamp(hi, -1.0, 1.0));
    j.theta_hi = std::acos(std::clamp(lo, -1.0, 1.0));
    j.theta_over_pi = root.theta_over_pi;
    if (j.theta_over_pi) {
      const auto& q = *j.theta_over_pi;
      j.theta = std::numbers::pi * static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
      j.theta_lo = std::min(j.theta_lo, j.theta);
      j.theta_hi = std::max(j.theta_hi, j.theta);
    } else {
      j.theta = std::acos(std::clamp(static_cast<double>((root.lo + root.hi) / 2), -1.0, 1.0));
    }
    upper.push_back(j);
  }
  std::vector<Jump> jumps = upper;
  for (auto it = upper.rbegin(); it != upper.rend(); ++it) {
    if (it->theta_over_pi && *it->theta_over_pi == Rational(1)) continue;
    Jump m{};
    m.theta = kTwoPi - it->theta;
    m.theta_lo = kTwoPi - it->theta_hi;
    m.theta_hi = kTwoPi - it->theta_lo;
    if (it->theta_over_pi) m.theta_over_pi = Rational(2) - *it->theta_over_pi;
    jumps.push_back(m);
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.theta < b.theta; });
  return jumps;
}

LevineTristram::LevineTristram(const SeifertMatrix& v) : jumps_(circle_jumps(alexander_polynomial(v))) {
  const auto n = static_cast<Eigen::Index>(v.size());
  v_.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      v_(r, c) = static_cast<double>(v.matrix()(static_cast<std::size_t>(r), static_cast<std::size_t>(c)));
    }
  }
}

int LevineTristram::operator()(const UnitCirclePoint& omega) const {
  for (const auto& j : jumps_) {
    if (omega.theta() >= j.theta_lo - kJumpExclusion && omega.theta() <= j.theta_hi + kJumpExclusion) {
      raise(ErrorCode::AtJumpPoint, "theta = " + std::to_string(omega.theta()) + " is at a root of Delta");
    }
  }
  if (v_.rows() == 0) return 0;
  const std::complex<double> w = omega.omega();
  const Eigen::MatrixXcd h =
      (1.0 - w) * v_.cast<std::complex<double>>() + (1.0 - std::conj(w)) * v_.transpose().cast<std::complex<double>>();
  try {
    return hermitian_signature(h);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NearSingular) raise(ErrorCode::AtJumpPoint, e.what());
    throw;
  }
}

int levine_tristram(const SeifertMatrix& v, const UnitCirclePoint& omega) { return LevineTristram(v)(omega); }

int SignatureProfile::sigma_at(double theta) const {
  for (const auto& a : arcs) {
    if (theta > a.start && theta < a.end) return a.sigma;
  }
  raise(ErrorCode::AtJumpPoint, "theta = " + std::to_string(theta) + " is not inside an arc");
}

SignatureProfile signature_profile(const SeifertMatrix& v) {
  const LevineTristram lt(v);
  SignatureProfile profile;
  profile.jumps = lt.jumps();
  double start = 0.0;
  auto push = [&](double end) {
    const double mid = 0.5 * (start + end);
    profile.arcs.push_back(Arc{start, end, lt(UnitCirclePoint(mid))});
    start = end;
  };
  for (const auto& j : profile.jumps) push(j.theta);
  push(kTwoPi);
  return profile;
}

Rho0 rho0(const SignatureProfile& profile) {
  Rho0 out;
  out.jump_count = profile.jumps.size();
  bool exact = true;
  for (const auto& j : profile.jumps) exact = exact && j.theta_over_pi.has_value();
  for (const auto& a : profile.arcs) out.value += a.sigma * (a.end - a.start) / kTwoPi;
  for (std::size_t k = 0; k < profile.jumps.size(); ++k) {
    const int step = std::abs(profile.arcs[k + 1].sigma - profile.arcs[k].sigma);
    const auto& j = profile.jumps[k];
    out.error_bound += step * std::max(j.theta_hi - j.theta, j.theta - j.theta_lo) / kTwoPi;
  }
  // Floating point summation.
  out.error_bound += 1e-15 * static_cast<double>(profile.arcs.size() + 1) * 64.0;
  if (exact) {
    Rational sum(0);
    Rational start(0);
    for (std::size_t k = 0; k < profile.arcs.size(); ++k) {
      const Rational end = k < profile.jumps.size() ? *profile.jumps[k].theta_over_pi : Rational(2);
      sum += Rational(profile.arcs[k].sigma) * (end - start) / Rational(2);
      start = end;
    }
    out.exact = sum;
    out.value = static_cast<double>(sum.numerator()) / static_cast<double>(sum.denominator());
    out.error_bound = 0.0;
  }
  return out;
}

Rho0 rho0(const SeifertMatrix& v) { return rho0(signature_profile(v)); }

std::vector<std::pair<double, int>> signature_samples(const SignatureProfile& profile, double offset) {
  std::vector<std::pair<double, int>> rows;
  for (const auto& a : profile.arcs) rows.emplace_back(0.5 * (a.start + a.end), a.sigma);
  for (const auto& j : profile.jumps) {
    for (const double t : {j.theta - offset, j.theta + offset}) {
      if (t > 0.0 && t < kTwoPi) rows.emplace_back(t, profile.sigma_at(t));
    }
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace knotforge
