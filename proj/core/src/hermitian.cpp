#include "knotforge/hermitian.hpp"

#include <cmath>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge {

UnitCirclePoint::UnitCirclePoint(double theta) : theta_(theta) {
  if (!(theta > 0.0 && theta < 2.0 * std::numbers::pi)) {
    std::ostringstream os;
    os << "theta must lie in (0, 2*pi), got " << theta;
    raise(ErrorCode::InvalidArgument, os.str());
  }
}

int hermitian_signature(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols()) raise(ErrorCode::SizeMismatch, "hermitian_signature needs a square matrix");
  if (h.rows() == 0) return 0;
  if (static_cast<std::size_t>(h.rows()) > kMaxSignatureSize) {
    raise(ErrorCode::InvalidArgument, "hermitian_signature limited to 64x64");
  }
  const double scale = h.cwiseAbs().maxCoeff();
  const double asym = (h - h.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol * std::max(scale, 1.0)) raise(ErrorCode::NotHermitian, "matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) raise(ErrorCode::Internal, "eigenvalue iteration did not converge");
  const Eigen::VectorXd& eig = solver.eigenvalues();
  const double norm = eig.cwiseAbs().maxCoeff();
  const double cutoff = kSignatureEps * norm;
  int sig = 0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (std::abs(eig[i]) <= cutoff || norm == 0.0) {
      std::ostringstream os;
      os << "eigenvalue " << eig[i] << " below threshold " << cutoff;
      raise(ErrorCode::NearSingular, os.str());
    }
    sig += eig[i] > 0 ? 1 : -1;
  }
  return sig;
}

}  // namespace knotforge
