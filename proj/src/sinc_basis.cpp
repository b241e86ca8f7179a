#include "descm/sinc_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace descm {

double sinc(double z) {
  const double pz = std::numbers::pi * z;
  if (std::abs(z) < 1e-4) {
    const double p2 = pz * pz;
    return 1.0 - p2 / 6.0 + p2 * p2 / 120.0;
  }
  return std::sin(pz) / pz;
}

double sinc_basis(int j, double h, double x) {
  if (!(h > 0.0)) throw std::invalid_argument("sinc_basis: mesh size must be positive");
  return sinc((x - j * h) / h);
}

double second_derivative_weight(int offset) {
  if (offset == 0) return -std::numbers::pi * std::numbers::pi / 3.0;
  const double r = offset;
  const double sign = (offset % 2 == 0) ? 1.0 : -1.0;
  return -2.0 * sign / (r * r);
}

SincWeights SincWeights::zeroth(int half_width) {
  if (half_width < 0) throw std::invalid_argument("SincWeights: negative half width");
  std::vector<double> values(4 * static_cast<std::size_t>(half_width) + 1, 0.0);
  values[2 * half_width] = 1.0;
  return SincWeights(0, half_width, std::move(values));
}

SincWeights SincWeights::second(int half_width) {
  if (half_width < 0) throw std::invalid_argument("SincWeights: negative half width");
  std::vector<double> values(4 * static_cast<std::size_t>(half_width) + 1);
  for (int r = -2 * half_width; r <= 2 * half_width; ++r) {
    values[r + 2 * half_width] = second_derivative_weight(r);
  }
  return SincWeights(2, half_width, std::move(values));
}

double SincWeights::operator()(int offset) const {
  if (offset < -2 * half_width_ || offset > 2 * half_width_) {
    throw std::out_of_range("SincWeights: offset " + std::to_string(offset) + " outside [-2N, 2N]");
  }
  return values_[offset + 2 * half_width_];
}

}  // namespace descm
