#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNumericalFailure = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kNotConverged = 3;

/// Runs the command line (args excludes the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descm::cli
