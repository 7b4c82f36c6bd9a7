#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace knotforge {

/// Eigenvalues with |lambda| <= kSignatureEps * ||h|| count as zero.
inline constexpr double kSignatureEps = 1e-9;
/// Relative tolerance for accepting a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;
inline constexpr std::size_t kMaxSignatureSize = 64;

/// A point e^{i theta} of the unit circle with theta strictly inside
/// (0, 2*pi), so omega = 1 cannot be represented.
class UnitCirclePoint {
 public:
  explicit UnitCirclePoint(double theta);

  double theta() const noexcept { return theta_; }
  std::complex<double> omega() const noexcept { return std::polar(1.0, theta_); }
  /// The conjugate point, theta -> 2*pi - theta.
  UnitCirclePoint conjugate() const { return UnitCirclePoint(2.0 * std::numbers::pi - theta_); }

 private:
  double theta_;
};

/// (#positive - #negative) eigenvalues of a Hermitian matrix. Raises
/// NotHermitian if h is not Hermitian within kHermitianTol (relative) and
/// NearSingular if some eigenvalue is within kSignatureEps * ||h|| of zero.
int hermitian_signature(const Eigen::MatrixXcd& h);

}  // namespace knotforge
