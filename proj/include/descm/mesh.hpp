#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "descm/potential.hpp"

namespace descm {

/// How the Sinc mesh size h is chosen for a given truncation N.
struct MeshStrategy {
  enum class Kind { OptimalLambertW, TraceMinimized, Fixed };

  Kind kind = Kind::OptimalLambertW;
  double fixed_h = 0.0;
  // Search interval and relative tolerance for TraceMinimized.
  double bracket_low = 1e-3;
  double bracket_high = 5.0;
  double tolerance = 1e-10;

  static MeshStrategy optimal() { return {}; }
  static MeshStrategy trace_minimized(double low = 1e-3, double high = 5.0, double tolerance = 1e-10);
  static MeshStrategy fixed(double h);

  /// Throws std::invalid_argument on an empty bracket or nonpositive h.
  void validate() const;
};

std::string_view to_string(MeshStrategy::Kind kind);

/// Principal branch of the Lambert W function on z >= 0 (Halley iteration).
double lambert_w0(double z);

/// Closed-form mesh size W(2^m pi^2 (m+1) N / sqrt(c_m)) / ((m+1) N).
double optimal_h(const EvenPolynomialPotential& potential, int half_width);

/// Tr(K)(h) from its closed form, without assembling K. Accepts N >= 0.
double trace_of_K(const EvenPolynomialPotential& potential, int half_width, double h);

/// Log-spaced samples (h, Tr(K)(h)) over [low, high], endpoints included.
std::vector<std::pair<double, double>> trace_profile(const EvenPolynomialPotential& potential,
                                                     int half_width, double low, double high,
                                                     int points);

/// argmin of Tr(K)(h) over the strategy's bracket: a 64-point log-spaced scan
/// followed by golden-section refinement around the best sample. Throws
/// BracketError when the scan minimum is on a bracket endpoint.
double trace_minimized_h(const EvenPolynomialPotential& potential, int half_width,
                         const MeshStrategy& strategy = MeshStrategy::trace_minimized());

/// Dispatches on strategy.kind.
double select_h(const EvenPolynomialPotential& potential, int half_width, const MeshStrategy& strategy);

}  // namespace descm
