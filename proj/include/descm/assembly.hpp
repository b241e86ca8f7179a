#pragma once

#include <iosfwd>

#include <Eigen/Dense>

#include "descm/potential.hpp"

namespace descm {

/// The symmetric (2N+1)x(2N+1) matrix K = D^-1 H D^-1 whose eigenvalues
/// approximate the energies. Logical indices j, k run over [-N, N].
class CollocationMatrix {
 public:
  CollocationMatrix(int half_width, double h, Eigen::MatrixXd entries)
      : half_width_(half_width), h_(h), entries_(std::move(entries)) {}

  int half_width() const { return half_width_; }
  int size() const { return 2 * half_width_ + 1; }
  double mesh() const { return h_; }
  const Eigen::MatrixXd& entries() const { return entries_; }

  double operator()(int j, int k) const { return entries_(j + half_width_, k + half_width_); }
  double trace() const { return entries_.trace(); }

 private:
  int half_width_;
  double h_;
  Eigen::MatrixXd entries_;
};

/// Assembles K directly from its closed-form entries. Off-diagonal entries are
/// computed once per unordered pair, so K is exactly symmetric. Throws
/// NumericalError when an entry overflows at some collocation point.
CollocationMatrix assemble_K(const EvenPolynomialPotential& potential, int half_width, double h);

/// The unreduced pair (H, D^2) of H v = E D^2 v; D^2 is stored as its diagonal.
struct GeneralizedPair {
  Eigen::MatrixXd H;
  Eigen::VectorXd D2;
};

GeneralizedPair assemble_H_D2(const EvenPolynomialPotential& potential, int half_width, double h);

/// One row per line, entries in scientific notation with 17 significant digits.
void write_matrix(std::ostream& out, const Eigen::MatrixXd& matrix);

}  // namespace descm
