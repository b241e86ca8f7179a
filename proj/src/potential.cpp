#include "descm/potential.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "number_format.hpp"

namespace descm {

EvenPolynomialPotential::EvenPolynomialPotential(std::vector<double> coefficients, double constant)
    : coefficients_(std::move(coefficients)), constant_(constant) {
  if (coefficients_.empty()) {
    throw std::invalid_argument("potential needs at least one coefficient");
  }
  for (double c : coefficients_) {
    if (!std::isfinite(c)) throw std::invalid_argument("potential coefficient is not finite");
  }
  if (!std::isfinite(constant_)) throw std::invalid_argument("potential constant is not finite");
  if (!(coefficients_.back() > 0.0)) {
    throw std::invalid_argument("leading coefficient c_m must be positive (potential must be confining)");
  }
}

double EvenPolynomialPotential::evaluate_squared(double s) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = (acc + *it) * s;
  }
  return acc + constant_;
}

std::string EvenPolynomialPotential::to_spec() const {
  std::string out = "poly:";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ',';
    out += detail::format_shortest(coefficients_[i]);
  }
  if (constant_ != 0.0) out += ";c0=" + detail::format_shortest(constant_);
  return out;
}

EvenPolynomialPotential chebyshev_well(int degree, double shift) {
  if (degree < 2 || degree % 2 != 0) {
    throw std::invalid_argument("chebyshev_well needs an even degree >= 2, got " + std::to_string(degree));
  }
  // Monomial coefficients, index = power. T0 = 1, T1 = x.
  std::vector<std::int64_t> prev{1};
  std::vector<std::int64_t> cur{0, 1};
  for (int k = 1; k < degree; ++k) {
    std::vector<std::int64_t> next(cur.size() + 1, 0);
    for (std::size_t p = 0; p < cur.size(); ++p) {
      std::int64_t doubled = 0;
      if (__builtin_mul_overflow(cur[p], std::int64_t{2}, &doubled) ||
          __builtin_add_overflow(next[p + 1], doubled, &next[p + 1])) {
        throw std::invalid_argument("chebyshev_well: degree too large for exact integer expansion");
      }
    }
    for (std::size_t p = 0; p < prev.size(); ++p) {
      if (__builtin_sub_overflow(next[p], prev[p], &next[p])) {
        throw std::invalid_argument("chebyshev_well: degree too large for exact integer expansion");
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  std::vector<double> coefficients;
  coefficients.reserve(degree / 2);
  for (int power = 2; power <= degree; power += 2) {
    coefficients.push_back(static_cast<double>(cur[power]));
  }
  return EvenPolynomialPotential(std::move(coefficients), static_cast<double>(cur[0]) + shift);
}

std::vector<AnalyticCase> analytic_catalog() {
  return {
      {"V1", EvenPolynomialPotential({1.0, -4.0, 1.0}), 0, -2.0},
      {"V2", EvenPolynomialPotential({4.0, -6.0, 1.0}), 1, -9.0},
      {"V3", EvenPolynomialPotential({105.0 / 64.0, -43.0 / 8.0, 1.0, -1.0, 1.0}), 0, 3.0 / 8.0},
      {"V4", EvenPolynomialPotential({169.0 / 64.0, -59.0 / 8.0, 1.0, -1.0, 1.0}), 1, 9.0 / 8.0},
  };
}

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw std::invalid_argument("invalid potential spec '" + std::string(spec) + "': " + why);
}

}  // namespace

EvenPolynomialPotential parse_potential(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) bad_spec(spec, "expected 'poly:' or 'cheb:' prefix");
  std::string_view kind = spec.substr(0, colon);
  auto sections = split(spec.substr(colon + 1), ';');
  std::string_view body = sections.front();

  std::string_view option_key;
  double option_value = 0.0;
  if (sections.size() > 2) bad_spec(spec, "at most one ';' option allowed");
  if (sections.size() == 2) {
    auto eq = sections[1].find('=');
    if (eq == std::string_view::npos) bad_spec(spec, "option must be key=value");
    option_key = sections[1].substr(0, eq);
    if (!detail::parse_number(sections[1].substr(eq + 1), option_value)) {
      bad_spec(spec, "option value is not a number");
    }
  }

  if (kind == "poly") {
    if (body.empty()) bad_spec(spec, "no coefficients");
    std::vector<double> coefficients;
    for (auto token : split(body, ',')) {
      double value = 0.0;
      if (!detail::parse_number(token, value)) bad_spec(spec, "bad coefficient '" + std::string(token) + "'");
      coefficients.push_back(value);
    }
    if (!option_key.empty() && option_key != "c0") bad_spec(spec, "poly accepts only the c0 option");
    return EvenPolynomialPotential(std::move(coefficients), option_value);
  }
  if (kind == "cheb") {
    long long degree = 0;
    if (!detail::parse_integer(body, degree)) bad_spec(spec, "bad Chebyshev degree");
    if (!option_key.empty() && option_key != "shift") bad_spec(spec, "cheb accepts only the shift option");
    if (degree > 1000) bad_spec(spec, "Chebyshev degree out of range");
    return chebyshev_well(static_cast<int>(degree), option_value);
  }
  bad_spec(spec, "unknown kind '" + std::string(kind) + "'");
}

}  // namespace descm
