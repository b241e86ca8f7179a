#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "descm/mesh.hpp"
#include "descm/potential.hpp"

namespace descm {

struct DescmProblem {
  EvenPolynomialPotential potential;
  MeshStrategy strategy = MeshStrategy::optimal();
  int levels_requested = 1;
};

struct SpectrumResult {
  int half_width = 0;
  double h_used = 0.0;
  MeshStrategy::Kind strategy_kind = MeshStrategy::Kind::OptimalLambertW;
  std::vector<double> eigenvalues;  // lowest levels_requested, ascending
  double wall_time = 0.0;           // seconds
  // K-eigenvectors z for the reported levels (columns), when requested.
  std::optional<Eigen::MatrixXd> eigenvectors;
};

/// Picks h for N according to the strategy, assembles K and diagonalizes it.
/// Throws std::invalid_argument if levels_requested is outside [1, 2N+1].
SpectrumResult solve(const DescmProblem& problem, int half_width, bool want_vectors = false);

struct ConvergenceRecord {
  int half_width = 0;
  double h = 0.0;
  double energy = 0.0;
  double epsilon = 0.0;  // |E_n(previous N) - E_n(N)|; NaN for the first record
};

struct ConvergenceTrace {
  int level = 0;
  std::vector<ConvergenceRecord> records;
  bool converged = false;
  std::vector<double> final_level_values;  // lowest levels at the last N swept
};

struct ConvergenceOptions {
  double tolerance = 5e-12;
  int start = 2;
  int step = 1;
  int max_half_width = 200;
  // Number of N values evaluated concurrently. 0 or 1 means sequential;
  // the trace is identical either way.
  int threads = 0;
};

/// Sweeps N = start, start+step, ... and stops at the first N whose
/// successive difference for `level` drops below the tolerance. Reaching
/// max_half_width is not an error: the trace comes back with converged=false.
ConvergenceTrace converge(const DescmProblem& problem, int level, const ConvergenceOptions& options = {});

/// Evaluates psi_n(x) = C_N(v, h)(asinh x) sqrt(cosh(asinh x)) from the
/// eigenvector of level n, with v_k = z_k / cosh(k h). The eigenvector is
/// scaled so h sum z_k^2 = 1 and signed so the largest |v_k| is positive.
double reconstruct_wavefunction(const SpectrumResult& result, int level, double x);

/// Reads DESCM_THREADS; unset, empty, or malformed yields 0.
int threads_from_environment();

}  // namespace descm
