#pragma once

#include <cmath>
#include <functional>

#include "descm/potential.hpp"

namespace descm {

// Double-exponential map x = sinh(t) and the potential of the transformed
// (symmetrized) equation  -v'' + Vt(t) v = E cosh^2(t) v.

inline double map_value(double t) { return std::sinh(t); }
inline double map_derivative(double t) { return std::cosh(t); }

/// A potential paired with the sinh map, plus the double-exponential decay
/// constants of the transformed solution, |v(t)| <= A exp(-B exp(gamma |t|)).
struct TransformedProblem {
  EvenPolynomialPotential potential;

  double decay_rate() const { return potential.degree_parameter() + 1.0; }
  double decay_amplitude() const;
};

/// Vt(t) = 1/4 - (3/4) sech^2(t) + cosh^2(t) V(sinh t).
/// Large |t| is evaluated in log space; returns +inf once the result
/// exceeds the double range.
double transformed_potential(const EvenPolynomialPotential& potential, double t);

/// Vt(t) / cosh^2(t) = sech^2/4 - 3 sech^4/4 + V(sinh t). This is the form
/// that enters the collocation matrix diagonal and its trace.
double scaled_transformed_potential(const EvenPolynomialPotential& potential, double t);

/// Reference evaluation of the general transformed potential
///   -sqrt(phi') d/dt( (1/phi') d/dt sqrt(phi') ) + phi'^2 V(phi)
/// for an arbitrary map phi, using nested five-point finite differences with
/// the given step. Only meant for validating the closed forms above.
double transformed_potential_general(const std::function<double(double)>& potential,
                                     const std::function<double(double)>& map, double t,
                                     double step = 1e-2);

}  // namespace descm

