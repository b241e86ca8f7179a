#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace descm {

// Precondition violations and malformed input are reported with
// std::invalid_argument. Failures of the numerics themselves (overflow,
// missing interior minimum, eigensolver stalls) use NumericalError.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the trace minimizer when the coarse scan's best point sits on
// a bracket endpoint. Carries the scanned (h, trace) profile so callers
// can widen the bracket.
class BracketError : public NumericalError {
 public:
  BracketError(const std::string& what, std::vector<std::pair<double, double>> profile)
      : NumericalError(what), profile_(std::move(profile)) {}

  const std::vector<std::pair<double, double>>& profile() const noexcept { return profile_; }

 private:
  std::vector<std::pair<double, double>> profile_;
};

}  // namespace descm
