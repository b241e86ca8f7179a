#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace descm {

struct EigenDecomposition {
  std::vector<double> eigenvalues;              // ascending
  std::optional<Eigen::MatrixXd> eigenvectors;  // column i pairs with eigenvalues[i]
};

/// Full decomposition of a dense real symmetric matrix. Rejects input whose
/// asymmetry exceeds 1e-12 relative to its largest entry; throws
/// NumericalError if the tridiagonal QR iteration does not converge.
EigenDecomposition eigen_symmetric(const Eigen::MatrixXd& matrix, bool want_vectors = false);

}  // namespace descm
