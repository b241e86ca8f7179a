#include "descm/mesh.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "collocation_detail.hpp"
#include "descm/error.hpp"

namespace descm {

MeshStrategy MeshStrategy::trace_minimized(double low, double high, double tolerance) {
  MeshStrategy s;
  s.kind = Kind::TraceMinimized;
  s.bracket_low = low;
  s.bracket_high = high;
  s.tolerance = tolerance;
  return s;
}

MeshStrategy MeshStrategy::fixed(double h) {
  MeshStrategy s;
  s.kind = Kind::Fixed;
  s.fixed_h = h;
  return s;
}

void MeshStrategy::validate() const {
  if (kind == Kind::Fixed && !(fixed_h > 0.0 && std::isfinite(fixed_h))) {
    throw std::invalid_argument("fixed mesh size must be positive and finite");
  }
  if (kind == Kind::TraceMinimized) {
    if (!(bracket_low > 0.0 && bracket_low < bracket_high && std::isfinite(bracket_high))) {
      throw std::invalid_argument("trace-minimization bracket must satisfy 0 < low < high");
    }
    if (!(tolerance > 0.0)) throw std::invalid_argument("trace-minimization tolerance must be positive");
  }
}

std::string_view to_string(MeshStrategy::Kind kind) {
  switch (kind) {
    case MeshStrategy::Kind::OptimalLambertW: return "optimal";
    case MeshStrategy::Kind::TraceMinimized: return "trace-min";
    case MeshStrategy::Kind::Fixed: return "fixed";
  }
  return "unknown";
}

double lambert_w0(double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) {
    throw std::invalid_argument("lambert_w0: argument must be finite and nonnegative");
  }
  if (z == 0.0) return 0.0;
  double w = z < std::numbers::e ? std::log1p(z) : std::log(z) - std::log(std::log(z));
  for (int iter = 0; iter < 50; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double step = f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
    w -= step;
    if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(w))) break;
  }
  return w;
}

double optimal_h(const EvenPolynomialPotential& potential, int half_width) {
  if (half_width < 1) throw std::invalid_argument("optimal_h: N must be >= 1");
  const int m = potential.degree_parameter();
  const double gammaN = (m + 1.0) * half_width;
  const double argument =
      std::ldexp(1.0, m) * std::numbers::pi * std::numbers::pi * gammaN / std::sqrt(potential.leading_coefficient());
  return lambert_w0(argument) / gammaN;
}

double trace_of_K(const EvenPolynomialPotential& potential, int half_width, double h) {
  if (half_width < 0) throw std::invalid_argument("trace_of_K: N must be >= 0");
  if (!(h > 0.0)) throw std::invalid_argument("trace_of_K: h must be positive");
  double sum = 0.0;
  for (int k = -half_width; k <= half_width; ++k) {
    sum += detail::collocation_diagonal(potential, k, h);
  }
  return sum;
}

std::vector<std::pair<double, double>> trace_profile(const EvenPolynomialPotential& potential,
                                                     int half_width, double low, double high,
                                                     int points) {
  if (!(low > 0.0 && low < high)) throw std::invalid_argument("trace_profile: need 0 < low < high");
  if (points < 2) throw std::invalid_argument("trace_profile: need at least two points");
  std::vector<std::pair<double, double>> profile;
  profile.reserve(points);
  const double log_low = std::log(low);
  const double log_span = std::log(high) - log_low;
  for (int i = 0; i < points; ++i) {
    const double h = i == 0 ? low : i == points - 1 ? high : std::exp(log_low + log_span * i / (points - 1));
    profile.emplace_back(h, trace_of_K(potential, half_width, h));
  }
  return profile;
}

double trace_minimized_h(const EvenPolynomialPotential& potential, int half_width,
                         const MeshStrategy& strategy) {
  if (half_width < 1) throw std::invalid_argument("trace_minimized_h: N must be >= 1");
  strategy.validate();
  constexpr int kScanPoints = 64;

  auto objective = [&](double h) {
    const double value = trace_of_K(potential, half_width, h);
    return std::isnan(value) ? std::numeric_limits<double>::infinity() : value;
  };

  auto profile = trace_profile(potential, half_width, strategy.bracket_low, strategy.bracket_high, kScanPoints);
  auto sample = [&](int i) {
    return std::isnan(profile[i].second) ? std::numeric_limits<double>::infinity() : profile[i].second;
  };
  // Strict comparison keeps the smaller h on ties.
  int best = 0;
  for (int i = 1; i < kScanPoints; ++i) {
    if (sample(i) < sample(best)) best = i;
  }
  if (best == 0 || best == kScanPoints - 1) {
    std::ostringstream msg;
    msg << "trace minimum not interior to bracket [" << strategy.bracket_low << ", "
        << strategy.bracket_high << "] (best sample at h=" << profile[best].first << ")";
    throw BracketError(msg.str(), std::move(profile));
  }

  double a = profile[best - 1].first;
  double b = profile[best + 1].first;
  double best_h = profile[best].first;
  double best_value = sample(best);
  auto consider = [&](double h, double value) {
    if (value < best_value || (value == best_value && h < best_h)) {
      best_value = value;
      best_h = h;
    }
  };

  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - ratio * (b - a);
  double x2 = a + ratio * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  consider(x1, f1);
  consider(x2, f2);
  for (int iter = 0; iter < 200 && (b - a) > strategy.tolerance * 0.5 * (a + b); ++iter) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - ratio * (b - a);
      f1 = objective(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + ratio * (b - a);
      f2 = objective(x2);
      consider(x2, f2);
    }
  }
  return best_h;
}

double select_h(const EvenPolynomialPotential& potential, int half_width, const MeshStrategy& strategy) {
  strategy.validate();
  switch (strategy.kind) {
    case MeshStrategy::Kind::OptimalLambertW: return optimal_h(potential, half_width);
    case MeshStrategy::Kind::TraceMinimized: return trace_minimized_h(potential, half_width, strategy);
    case MeshStrategy::Kind::Fixed: return strategy.fixed_h;
  }
  throw std::invalid_argument("unknown mesh strategy");
}

}  // namespace descm
