#pragma once

#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "descm/potential.hpp"

namespace descm::test {

// Bisection on w e^w = z over [lo, hi]; independent of the Halley solver.
inline double lambert_w_bisection(double z, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(mid) < z) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Random valid potential: degree m in [1, max_m], inner coefficients in
// [-1, 1], leading coefficient in [min_leading, 1].
inline EvenPolynomialPotential random_potential(std::mt19937_64& rng, int max_m = 5, double min_leading = 0.1) {
  std::uniform_int_distribution<int> degree(1, max_m);
  std::uniform_real_distribution<double> inner(-1.0, 1.0);
  std::uniform_real_distribution<double> leading(min_leading, 1.0);
  const int m = degree(rng);
  std::vector<double> c(m);
  for (int i = 0; i + 1 < m; ++i) c[i] = inner(rng);
  c[m - 1] = leading(rng);
  return EvenPolynomialPotential(c);
}

inline Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = u(rng);
  }
  return a;
}

// det(A) by Gaussian elimination with partial pivoting, test-only.
inline double determinant(Eigen::MatrixXd a) {
  const int n = static_cast<int>(a.rows());
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      a.row(r).tail(n - col) -= factor * a.row(col).tail(n - col);
    }
  }
  return det;
}

// Roots of det(A - lambda I): sign changes on a fine grid, then bisection.
inline std::vector<double> characteristic_roots(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  const double bound = a.norm() + 1.0;
  auto f = [&](double lambda) { return determinant(a - lambda * Eigen::MatrixXd::Identity(n, n)); };
  std::vector<double> roots;
  const int grid = 20000;
  double prev_x = -bound;
  double prev_f = f(prev_x);
  for (int i = 1; i <= grid; ++i) {
    const double x = -bound + 2 * bound * i / grid;
    const double fx = f(x);
    if ((prev_f < 0) != (fx < 0)) {
      double lo = prev_x, hi = x, flo = prev_f;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    prev_x = x;
    prev_f = fx;
  }
  return roots;
}

}  // namespace descm::test
