#include "descm/assembly.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "collocation_detail.hpp"
#include "descm/de_map.hpp"
#include "descm/error.hpp"
#include "descm/sinc_basis.hpp"

namespace descm {

namespace {

void check_arguments(int half_width, double h) {
  if (half_width < 1) throw std::invalid_argument("assembly: N must be >= 1");
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("assembly: h must be positive and finite");
}

[[noreturn]] void overflow_at(int k, double h, const char* what) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "assembly overflow in " << what << " at collocation point k=" << k << " (t=" << k * h << ")";
  throw NumericalError(msg.str());
}

}  // namespace

CollocationMatrix assemble_K(const EvenPolynomialPotential& potential, int half_width, double h) {
  check_arguments(half_width, h);
  const int n = 2 * half_width + 1;
  const auto weights = SincWeights::second(half_width);

  Eigen::VectorXd cosh_values(n);
  for (int k = -half_width; k <= half_width; ++k) {
    const double c = std::cosh(k * h);
    if (!std::isfinite(c)) overflow_at(k, h, "cosh");
    cosh_values(k + half_width) = c;
  }

  Eigen::MatrixXd K(n, n);
  const double inv_h2 = 1.0 / (h * h);
  for (int col = 0; col < n; ++col) {
    const double diagonal = detail::collocation_diagonal(potential, col - half_width, h);
    if (!std::isfinite(diagonal)) overflow_at(col - half_width, h, "transformed potential");
    K(col, col) = diagonal;
    for (int row = col + 1; row < n; ++row) {
      const double value = -weights(row - col) * inv_h2 / (cosh_values(row) * cosh_values(col));
      K(row, col) = value;
      K(col, row) = value;
    }
  }
  return CollocationMatrix(half_width, h, std::move(K));
}

GeneralizedPair assemble_H_D2(const EvenPolynomialPotential& potential, int half_width, double h) {
  check_arguments(half_width, h);
  const int n = 2 * half_width + 1;
  GeneralizedPair pair{Eigen::MatrixXd(n, n), Eigen::VectorXd(n)};
  for (int k = -half_width; k <= half_width; ++k) {
    const double c = std::cosh(k * h);
    const double vt = transformed_potential(potential, k * h);
    if (!std::isfinite(c * c) || !std::isfinite(vt)) overflow_at(k, h, "H/D2 entries");
    pair.D2(k + half_width) = c * c;
    for (int j = -half_width; j <= half_width; ++j) {
      double value = -second_derivative_weight(k - j) / (h * h);
      if (j == k) value += vt;
      pair.H(j + half_width, k + half_width) = value;
    }
  }
  return pair;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& matrix) {
  char buf[40];
  for (Eigen::Index r = 0; r < matrix.rows(); ++r) {
    for (Eigen::Index c = 0; c < matrix.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.16e", matrix(r, c));
      if (c) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace descm
