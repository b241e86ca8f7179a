#pragma once

#include <vector>

namespace descm {

/// sin(pi z) / (pi z), with the removable singularity at 0 filled in.
double sinc(double z);

/// Shifted basis function S(j,h)(x) = sinc((x - j h) / h). Requires h > 0.
double sinc_basis(int j, double h, double x);

/// h^2 S''(j,h)(k h) as a function of the offset r = k - j:
/// -pi^2/3 at r = 0, otherwise -2 (-1)^r / r^2.
double second_derivative_weight(int offset);

/// Collocation weights delta^(0) or delta^(2) for offsets in [-2N, 2N],
/// computed once and shared by every row of a collocation matrix.
class SincWeights {
 public:
  static SincWeights zeroth(int half_width);
  static SincWeights second(int half_width);

  int order() const { return order_; }
  int half_width() const { return half_width_; }
  double operator()(int offset) const;

 private:
  SincWeights(int order, int half_width, std::vector<double> values)
      : order_(order), half_width_(half_width), values_(std::move(values)) {}

  int order_;
  int half_width_;
  std::vector<double> values_;  // index offset + 2N
};

}  // namespace descm
