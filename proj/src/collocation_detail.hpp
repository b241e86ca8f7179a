#pragma once

#include <cmath>
#include <numbers>

#include "descm/de_map.hpp"

namespace descm::detail {

// Diagonal of K at collocation point k h: (pi^2/3) / (h cosh(kh))^2 + Vt(kh) / cosh^2(kh).
inline double collocation_diagonal(const EvenPolynomialPotential& potential, int k, double h) {
  const double t = k * h;
  const double c = std::cosh(t);
  const double kinetic = (std::numbers::pi * std::numbers::pi / 3.0) / (h * h * c * c);
  return kinetic + scaled_transformed_potential(potential, t);
}

}  // namespace descm::detail
