#include "descm/eigensolver.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "descm/error.hpp"

namespace descm {

EigenDecomposition eigen_symmetric(const Eigen::MatrixXd& matrix, bool want_vectors) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("eigen_symmetric: matrix is not square");
  if (matrix.size() == 0) return {};
  if (!matrix.allFinite()) throw std::invalid_argument("eigen_symmetric: matrix has non-finite entries");

  const double scale = matrix.cwiseAbs().maxCoeff();
  const double asymmetry = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "eigen_symmetric: matrix is not symmetric (max |A - A^T| = " << asymmetry << ")";
    throw std::invalid_argument(msg.str());
  }

  // Householder tridiagonalization followed by implicit symmetric QR.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      matrix, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigen_symmetric: tridiagonal QR iteration did not converge");
  }

  EigenDecomposition result;
  const auto& values = solver.eigenvalues();
  result.eigenvalues.assign(values.data(), values.data() + values.size());
  if (want_vectors) result.eigenvectors = solver.eigenvectors();
  return result;
}

}  // namespace descm
