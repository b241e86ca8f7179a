#include "descm/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <stdexcept>
#include <string>

#include "descm/assembly.hpp"
#include "descm/eigensolver.hpp"
#include "descm/sinc_basis.hpp"

namespace descm {

SpectrumResult solve(const DescmProblem& problem, int half_width, bool want_vectors) {
  if (half_width < 1) throw std::invalid_argument("solve: N must be >= 1");
  const int size = 2 * half_width + 1;
  if (problem.levels_requested < 1 || problem.levels_requested > size) {
    throw std::invalid_argument("solve: levels_requested=" + std::to_string(problem.levels_requested) +
                                " must lie in [1, 2N+1=" + std::to_string(size) + "]");
  }
  const auto started = std::chrono::steady_clock::now();

  SpectrumResult result;
  result.half_width = half_width;
  result.strategy_kind = problem.strategy.kind;
  result.h_used = select_h(problem.potential, half_width, problem.strategy);

  const auto K = assemble_K(problem.potential, half_width, result.h_used);
  auto decomposition = eigen_symmetric(K.entries(), want_vectors);
  result.eigenvalues.assign(decomposition.eigenvalues.begin(),
                            decomposition.eigenvalues.begin() + problem.levels_requested);
  if (want_vectors) result.eigenvectors = decomposition.eigenvectors->leftCols(problem.levels_requested);

  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

namespace {

struct SweepPoint {
  double h = 0.0;
  std::vector<double> eigenvalues;
};

SweepPoint evaluate_point(const DescmProblem& problem, int half_width, int levels) {
  DescmProblem local = problem;
  local.levels_requested = std::min(levels, 2 * half_width + 1);
  auto result = solve(local, half_width);
  return {result.h_used, std::move(result.eigenvalues)};
}

}  // namespace

ConvergenceTrace converge(const DescmProblem& problem, int level, const ConvergenceOptions& options) {
  if (!(options.tolerance > 0.0)) throw std::invalid_argument("converge: tolerance must be positive");
  if (options.step < 1) throw std::invalid_argument("converge: N step must be >= 1");
  if (level < 0) throw std::invalid_argument("converge: level must be >= 0");
  if (options.start < 1) throw std::invalid_argument("converge: starting N must be >= 1");

  // The sweep begins where the level exists, i.e. 2N+1 > level.
  const int first = std::max(options.start, (level + 1) / 2);
  const int levels = std::max(level + 1, problem.levels_requested);
  const int batch = std::max(1, options.threads);

  ConvergenceTrace trace;
  trace.level = level;
  double previous = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> last_values;

  for (int base = first; base <= options.max_half_width; base += batch * options.step) {
    std::vector<int> batch_n;
    for (int i = 0; i < batch; ++i) {
      const int n = base + i * options.step;
      if (n > options.max_half_width) break;
      batch_n.push_back(n);
    }
    std::vector<SweepPoint> points(batch_n.size());
    if (batch_n.size() == 1) {
      points[0] = evaluate_point(problem, batch_n[0], levels);
    } else {
      std::vector<std::future<SweepPoint>> futures;
      for (int n : batch_n) {
        futures.push_back(std::async(std::launch::async, evaluate_point, std::cref(problem), n, levels));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) points[i] = futures[i].get();
    }

    // Consumed in N order so the stopping decision matches a sequential sweep.
    for (std::size_t i = 0; i < batch_n.size(); ++i) {
      const double energy = points[i].eigenvalues[level];
      ConvergenceRecord record{batch_n[i], points[i].h, energy, std::abs(previous - energy)};
      trace.records.push_back(record);
      last_values = std::move(points[i].eigenvalues);
      previous = energy;
      if (trace.records.size() > 1 && record.epsilon < options.tolerance) {
        trace.converged = true;
        break;
      }
    }
    if (trace.converged) break;
  }

  last_values.resize(std::min<std::size_t>(last_values.size(), problem.levels_requested));
  trace.final_level_values = std::move(last_values);
  return trace;
}

double reconstruct_wavefunction(const SpectrumResult& result, int level, double x) {
  if (!result.eigenvectors) throw std::invalid_argument("reconstruct_wavefunction: eigenvectors were not computed");
  const auto& vectors = *result.eigenvectors;
  if (level < 0 || level >= vectors.cols()) throw std::invalid_argument("reconstruct_wavefunction: level out of range");

  const int N = result.half_width;
  const double h = result.h_used;
  Eigen::VectorXd z = vectors.col(level);
  z /= std::sqrt(h * z.squaredNorm());

  Eigen::VectorXd v(z.size());
  for (int k = -N; k <= N; ++k) v(k + N) = z(k + N) / std::cosh(k * h);
  Eigen::Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  if (v(peak) < 0.0) v = -v;

  const double t = std::asinh(x);
  double sum = 0.0;
  for (int k = -N; k <= N; ++k) sum += v(k + N) * sinc_basis(k, h, t);
  return sum * std::sqrt(std::cosh(t));
}

int threads_from_environment() {
  const char* value = std::getenv("DESCM_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 0) return 0;
  return static_cast<int>(std::min<long>(parsed, 256));
}

}  // namespace descm
