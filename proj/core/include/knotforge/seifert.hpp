#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "knotforge/circle_roots.hpp"
#include "knotforge/hermitian.hpp"
#include "knotforge/int_matrix.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

/// Square integer matrix of even size 2g with det(V - V^T) = 1.
class SeifertMatrix {
 public:
  /// Empty matrix (the unknot).
  SeifertMatrix() = default;
  /// Throws InvalidSeifertMatrix unless v is square, of even size at most
  /// kMaxSignatureSize, and det(v - v^T) = 1.
  explicit SeifertMatrix(IntMatrix v);

  const IntMatrix& matrix() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.rows(); }
  std::size_t genus() const noexcept { return v_.rows() / 2; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix v_;
};

/// Delta(t) = det(V - t V^T), normalized so Delta(t) = Delta(1/t) and Delta(1) = 1.
LaurentPoly alexander_polynomial(const SeifertMatrix& v);

/// Radius around a jump inside which the signature is refused.
inline constexpr double kJumpExclusion = 1e-9;

/// A zero of Delta on the unit circle.
struct Jump {
  double theta;
  /// Certified enclosure [theta_lo, theta_hi] of the true angle.
  double theta_lo;
  double theta_hi;
  /// theta / pi when the angle is known exactly.
  std::optional<Rational> theta_over_pi;
};

struct Arc {
  double start;
  double end;
  int sigma;
};

struct SignatureProfile {
  /// Consecutive arcs covering (0, 2 pi) with the jumps removed.
  std::vector<Arc> arcs;
  /// Sorted by theta.
  std::vector<Jump> jumps;

  /// sigma of the arc containing theta; AtJumpPoint if theta is a jump.
  int sigma_at(double theta) const;
};

/// Jumps of the signature function, i.e. zeros of Delta on the circle.
std::vector<Jump> circle_jumps(const LaurentPoly& alexander);

/// Signature evaluator that precomputes the jump set once.
class LevineTristram {
 public:
  explicit LevineTristram(const SeifertMatrix& v);

  /// Signature of (1 - w) V + (1 - conj w) V^T.
  /// Throws AtJumpPoint within kJumpExclusion of a jump or if the form is
  /// numerically singular.
  int operator()(const UnitCirclePoint& omega) const;

  const std::vector<Jump>& jumps() const noexcept { return jumps_; }

 private:
  Eigen::MatrixXd v_;
  std::vector<Jump> jumps_;
};

int levine_tristram(const SeifertMatrix& v, const UnitCirclePoint& omega);

SignatureProfile signature_profile(const SeifertMatrix& v);

/// Integral of the signature function against the normalized Haar measure.
struct Rho0 {
  double value = 0.0;
  /// Bound on |value - true integral| coming from root enclosures.
  double error_bound = 0.0;
  /// Present when every jump angle is a known rational multiple of pi.
  std::optional<Rational> exact;
  std::size_t jump_count = 0;
};

Rho0 rho0(const SignatureProfile& profile);
Rho0 rho0(const SeifertMatrix& v);

/// (theta, sigma) samples: every arc midpoint plus points at +-offset around
/// each jump, sorted by theta.
std::vector<std::pair<double, int>> signature_samples(const SignatureProfile& profile, double offset = 1e-6);

}  // namespace knotforge
