// Acceptance report: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "descm/descm.hpp"
#include "presets.hpp"
#include "test_support.hpp"

using namespace descm;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " {" << what << "}";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double level_error(const EvenPolynomialPotential& p, MeshStrategy s, int level, double exact, int N) {
  return std::abs(solve({p, s, level + 1}, N).eigenvalues[level] - exact);
}

Verdict exact_eigenvalues() {
  Verdict v;
  for (const auto& c : analytic_catalog()) {
    const auto start = std::chrono::steady_clock::now();
    const double opt = level_error(c.potential, MeshStrategy::optimal(), c.level, c.exact_energy, 45);
    const double elapsed = seconds_since(start);
    const double bound = c.name == "V2" ? 1e-8 : 1e-9;
    v.detail << ' ' << c.name << "=" << sci(opt);
    v.require(opt <= bound, c.name + " optimal h error " + sci(opt));
    v.require(elapsed < 1.0, c.name + " took " + sci(elapsed) + " s");
    if (c.name == "V2") {
      const double tm = level_error(c.potential, MeshStrategy::trace_minimized(), c.level, c.exact_energy, 45);
      v.detail << " V2(trace-min)=" << sci(tm);
      v.require(tm <= 1e-9, "V2 trace-min error " + sci(tm));
    }
  }
  return v;
}

Verdict quartic_ground_state() {
  Verdict v;
  const auto trace = converge({EvenPolynomialPotential({1.0, 1.0})}, 0);
  const auto& last = trace.records.back();
  const double error = std::abs(last.energy - 1.392351641530291855);
  v.detail << " N=" << last.half_width << " error=" << sci(error) << " eps=" << sci(last.epsilon);
  v.require(trace.converged, "not converged");
  v.require(error <= 2e-11, "energy error");
  v.require(std::abs(last.half_width - 17) <= 3, "stopping N");
  v.require(last.epsilon < 5e-12, "final eps");
  return v;
}

Verdict spectrum_row(int table_id, int N, const std::vector<double>& bounds, double time_limit) {
  Verdict v;
  const auto& table = cli::spectrum_table(table_id);
  const auto row = std::find(table.half_widths.begin(), table.half_widths.end(), N) - table.half_widths.begin();
  const auto start = std::chrono::steady_clock::now();
  const auto result = solve({EvenPolynomialPotential(table.coefficients), MeshStrategy::optimal(), 3}, N);
  const double elapsed = seconds_since(start);
  for (int n = 0; n < 3; ++n) {
    const double error = std::abs(result.eigenvalues[n] - table.reference[row][n]);
    v.detail << " E" << n << "=" << sci(error);
    v.require(error <= bounds[n], "E" + std::to_string(n) + " error " + sci(error));
  }
  if (time_limit > 0) v.require(elapsed < time_limit, "took " + sci(elapsed) + " s");
  return v;
}

Verdict octic_spectrum() {
  Verdict v = spectrum_row(2, 12, {1e-9, 1e-9, 1e-9}, 0.0);
  // The tabulated rows line up with this implementation at 5/3 of the listed N.
  const auto& table = cli::spectrum_table(2);
  const auto shifted = solve({EvenPolynomialPotential(table.coefficients), MeshStrategy::optimal(), 3}, 20);
  double worst = 0.0;
  for (int n = 0; n < 3; ++n) worst = std::max(worst, std::abs(shifted.eigenvalues[n] - table.reference[3][n]));
  v.detail << " | listed row at N=20: max error " << sci(worst);
  return v;
}

Verdict ground_state_tables() {
  Verdict v;
  for (int id : {4, 5, 6}) {
    int rows = 0;
    for (const auto& row : cli::ground_state_table(id).rows) {
      const auto trace = converge({EvenPolynomialPotential(row.coefficients)}, 0);
      const auto& last = trace.records.back();
      const double error = std::abs(last.energy - row.reference_energy);
      std::ostringstream name;
      name << "table " << id << " (";
      for (std::size_t i = 0; i < row.coefficients.size(); ++i) name << (i ? "," : "") << row.coefficients[i];
      name << ")";
      v.require(trace.converged, name.str() + " not converged");
      v.require(error <= 1e-9, name.str() + " error " + sci(error));
      v.require(std::abs(last.half_width - row.reference_half_width) <= 5,
                name.str() + " N=" + std::to_string(last.half_width));
      ++rows;
    }
    v.detail << " table" << id << ":" << rows << "rows";
  }
  return v;
}

Verdict trace_machinery() {
  Verdict v;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> ns(1, 40);
  std::uniform_real_distribution<double> log_h(std::log(0.01), std::log(2.0));
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p = test::random_potential(rng);
    const int N = ns(rng);
    const double h = std::exp(log_h(rng));
    const double closed = trace_of_K(p, N, h);
    const double assembled = assemble_K(p, N, h).trace();
    worst = std::max(worst, std::abs(closed - assembled) / std::abs(assembled));
  }
  v.detail << " trace rel diff " << sci(worst);
  v.require(worst <= 1e-12, "closed-form trace");

  std::vector<EvenPolynomialPotential> potentials{EvenPolynomialPotential({1.0, 1.0}), chebyshev_well(10, -1.0)};
  for (const auto& c : analytic_catalog()) potentials.push_back(c.potential);
  const auto strategy = MeshStrategy::trace_minimized();
  int cases = 0;
  for (const auto& p : potentials) {
    for (int N : {1, 5, 20, 40}) {
      const double h_hat = trace_minimized_h(p, N, strategy);
      const double t_hat = trace_of_K(p, N, h_hat);
      v.require(trace_of_K(p, N, strategy.bracket_low) > t_hat && trace_of_K(p, N, strategy.bracket_high) > t_hat,
                "endpoint not above minimum for " + p.to_spec());
      const auto profile = trace_profile(p, N, strategy.bracket_low, strategy.bracket_high, 200);
      const auto best = std::min_element(profile.begin(), profile.end(),
                                         [](const auto& a, const auto& b) { return a.second < b.second; }) -
                        profile.begin();
      long cell = 0;
      while (cell + 1 < static_cast<long>(profile.size()) && profile[cell + 1].first <= h_hat) ++cell;
      v.require(std::abs(cell - best) <= 2, "scan minimum off for " + p.to_spec() + " N=" + std::to_string(N));
      ++cases;
    }
  }
  v.detail << ", " << cases << " scan cases";
  return v;
}

Verdict multi_well() {
  Verdict v;
  const auto v2 = analytic_catalog()[1];
  const auto cheb = chebyshev_well(10, -1.0);
  const double cheb_reference = solve({cheb, MeshStrategy::trace_minimized()}, 150).eigenvalues[0];
  struct Case {
    std::string name;
    EvenPolynomialPotential potential;
    int level;
    double exact;
  };
  for (const auto& c : {Case{"V2", v2.potential, v2.level, v2.exact_energy}, Case{"cheb10", cheb, 0, cheb_reference}}) {
    for (int N : {15, 20, 25}) {
      const double opt = level_error(c.potential, MeshStrategy::optimal(), c.level, c.exact, N);
      const double tm = level_error(c.potential, MeshStrategy::trace_minimized(), c.level, c.exact, N);
      v.detail << ' ' << c.name << "@" << N << ":" << sci(tm) << "<=" << sci(opt);
      v.require(tm <= opt + 1e-12, c.name + " N=" + std::to_string(N));
    }
  }
  return v;
}

Verdict properties() {
  Verdict v;
  // Sinc second-derivative weights against a Richardson-extrapolated difference.
  double fd = 0.0;
  for (int r = -6; r <= 6; ++r) {
    auto d2 = [&](double s) { return (sinc(r + s) - 2 * sinc(r) + sinc(r - s)) / (s * s); };
    const double estimate = (4 * d2(5e-4) - d2(1e-3)) / 3;
    fd = std::max(fd, std::abs(estimate - second_derivative_weight(r)));
  }
  v.detail << " d2=" << sci(fd);
  v.require(fd <= 1e-6, "second-derivative weights");

  std::mt19937_64 rng(99);
  bool symmetric = true;
  for (int i = 0; i < 20; ++i) {
    const auto K = assemble_K(test::random_potential(rng), 1 + i, 0.05 + 0.03 * i);
    symmetric = symmetric && K.entries() == K.entries().transpose();
  }
  v.require(symmetric, "K symmetry");

  double identities = 0.0;
  for (int n : {5, 17, 60}) {
    const auto a = test::random_symmetric(rng, n);
    const auto d = eigen_symmetric(a);
    double sum = 0.0, squares = 0.0;
    for (double e : d.eigenvalues) {
      sum += e;
      squares += e * e;
    }
    identities = std::max({identities, std::abs(sum - a.trace()) / a.cwiseAbs().sum() * n,
                           std::abs(squares - a.squaredNorm()) / a.squaredNorm()});
  }
  v.detail << " identities=" << sci(identities);
  v.require(identities <= 1e-11, "trace/Frobenius identities");

  const auto a = test::random_symmetric(rng, 6);
  const auto roots = test::characteristic_roots(a);
  const auto d = eigen_symmetric(a);
  double bisection = roots.size() == 6 ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < roots.size() && i < 6; ++i) bisection = std::max(bisection, std::abs(roots[i] - d.eigenvalues[i]));
  v.detail << " det-bisection=" << sci(bisection);
  v.require(bisection <= 1e-9, "6x6 determinant oracle");

  double lambert = 0.0;
  for (int i = 0; i <= 400; ++i) {
    const double z = std::pow(10.0, -8.0 + 16.0 * i / 400.0);
    const double w = lambert_w0(z);
    lambert = std::max(lambert, std::abs(w * std::exp(w) - z) / std::max(1.0, z));
  }
  v.detail << " W=" << sci(lambert);
  v.require(lambert <= 1e-13, "Lambert W residual");

  const auto harmonic = solve({EvenPolynomialPotential({1.0}), MeshStrategy::optimal(), 6}, 30);
  double ho = 0.0;
  for (int n = 0; n <= 5; ++n) ho = std::max(ho, std::abs(harmonic.eigenvalues[n] - (2 * n + 1)));
  v.detail << " harmonic=" << sci(ho);
  v.require(ho <= 1e-8, "harmonic oscillator");
  return v;
}

Verdict ten_well() {
  Verdict v;
  ConvergenceOptions options;
  options.max_half_width = 1000;
  options.threads = threads_from_environment();
  const auto start = std::chrono::steady_clock::now();
  const auto trace = converge({chebyshev_well(20, -1.0), MeshStrategy::trace_minimized()}, 0, options);
  const auto& last = trace.records.back();
  v.detail << " N=" << last.half_width << " E0=" << last.energy << " eps=" << sci(last.epsilon) << " in "
           << sci(seconds_since(start)) << " s";
  v.require(trace.converged, "not converged by N=1000");
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "exact eigenvalues of the analytic catalog at N=45", exact_eigenvalues},
      {2, "x^2+x^4 ground state by the stopping rule", quartic_ground_state},
      {3, "decic spectrum at N=50", [] { return spectrum_row(1, 50, {1e-10, 1e-10, 1e-9}, 2.0); }},
      {4, "octic spectrum at N=12", octic_spectrum},
      {5, "ground-state tables for sextic, octic and decic wells", ground_state_tables},
      {6, "trace machinery", trace_machinery},
      {7, "trace-minimized mesh on multi-well potentials", multi_well},
      {8, "property suites", properties},
      {9, "ten-well Chebyshev potential converges", ten_well},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " exception: " << e.what();
    }
    if (!v.pass) ++failures;
    std::printf("[%s] %d %s:%s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
