#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace descm {

/// Even polynomial potential V(x) = c0 + sum_{i=1..m} c_i x^(2i).
///
/// Coefficients are stored for the even powers only, so evaluation at x and
/// -x goes through the same x*x and is bit-identical. The leading coefficient
/// must be strictly positive, which keeps the Hamiltonian confining.
class EvenPolynomialPotential {
 public:
  /// `coefficients[i]` multiplies x^(2(i+1)). Throws std::invalid_argument
  /// when the list is empty, contains non-finite values, or ends in c_m <= 0.
  explicit EvenPolynomialPotential(std::vector<double> coefficients, double constant = 0.0);

  double operator()(double x) const { return evaluate_squared(x * x); }

  /// V expressed in s = x^2 (Horner in s).
  double evaluate_squared(double s) const;

  int degree_parameter() const { return static_cast<int>(coefficients_.size()); }
  double leading_coefficient() const { return coefficients_.back(); }
  double constant() const { return constant_; }
  std::span<const double> coefficients() const { return coefficients_; }

  /// Canonical `poly:` spec string that parses back to this potential.
  std::string to_spec() const;

  friend bool operator==(const EvenPolynomialPotential&, const EvenPolynomialPotential&) = default;

 private:
  std::vector<double> coefficients_;
  double constant_ = 0.0;
};

/// Monomial expansion of T_n(x) + shift for even n >= 2. The x^0 term
/// T_n(0) + shift goes into the constant.
EvenPolynomialPotential chebyshev_well(int degree, double shift);

/// Potential with a closed-form eigenvalue, used for validation.
struct AnalyticCase {
  std::string name;
  EvenPolynomialPotential potential;
  int level = 0;
  double exact_energy = 0.0;
};

/// The four supersymmetric potentials with known energies, in order V1..V4.
std::vector<AnalyticCase> analytic_catalog();

/// Parses `poly:<c1>,<c2>,...,<cm>[;c0=<v>]` or `cheb:<n>[;shift=<v>]`.
/// Number parsing is locale-independent. Throws std::invalid_argument.
EvenPolynomialPotential parse_potential(std::string_view spec);

}  // namespace descm
