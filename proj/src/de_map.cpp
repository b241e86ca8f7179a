#include "descm/de_map.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace descm {

namespace {

constexpr double kLogSpaceThreshold = 20.0;
constexpr double kSechFlushThreshold = 350.0;

double sech_squared(double t) {
  if (std::abs(t) > kSechFlushThreshold) return 0.0;
  const double c = std::cosh(t);
  return 1.0 / (c * c);
}

// cosh^2(t) V(sinh t) for |t| > 20, where cosh t and |sinh t| equal
// e^{|t|}/2 to within a relative 1e-17.
double scaled_polynomial_log_space(const EvenPolynomialPotential& potential, double t) {
  const double a = std::abs(t) - std::numbers::ln2;
  const auto coefficients = potential.coefficients();
  const int m = potential.degree_parameter();
  const double leading = std::exp(2.0 * (m + 1) * a);
  if (!std::isfinite(leading)) return std::numeric_limits<double>::infinity();
  double sum = potential.constant() * std::exp(2.0 * a);
  for (int i = 1; i <= m; ++i) {
    sum += coefficients[i - 1] * std::exp(2.0 * (i + 1) * a);
  }
  return sum;
}

}  // namespace

double TransformedProblem::decay_amplitude() const {
  const int m = potential.degree_parameter();
  return std::sqrt(potential.leading_coefficient()) / ((m + 1) * std::ldexp(1.0, m + 1));
}

double transformed_potential(const EvenPolynomialPotential& potential, double t) {
  const double base = 0.25 - 0.75 * sech_squared(t);
  if (std::abs(t) > kLogSpaceThreshold) {
    return base + scaled_polynomial_log_space(potential, t);
  }
  const double c = std::cosh(t);
  const double s = std::sinh(t);
  return base + c * c * potential.evaluate_squared(s * s);
}

double scaled_transformed_potential(const EvenPolynomialPotential& potential, double t) {
  const double sech2 = sech_squared(t);
  const double s = std::sinh(t);
  return 0.25 * sech2 - 0.75 * sech2 * sech2 + potential.evaluate_squared(s * s);
}

namespace {

double five_point_derivative(const std::function<double(double)>& f, double t, double step) {
  return (f(t - 2 * step) - 8.0 * f(t - step) + 8.0 * f(t + step) - f(t + 2 * step)) / (12.0 * step);
}

}  // namespace

double transformed_potential_general(const std::function<double(double)>& potential,
                                     const std::function<double(double)>& map, double t, double step) {
  if (!(step > 1e-6 * std::max(1.0, std::abs(t)))) {
    throw std::invalid_argument("transformed_potential_general: finite-difference step underflow");
  }
  auto dmap = [&](double y) { return five_point_derivative(map, y, step); };
  auto root = [&](double y) { return std::sqrt(dmap(y)); };
  auto inner = [&](double y) { return five_point_derivative(root, y, step) / dmap(y); };
  const double d = dmap(t);
  return -std::sqrt(d) * five_point_derivative(inner, t, step) + d * d * potential(map(t));
}

}  // namespace descm
