#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace casimir::cli {

/// Process exit codes, also listed in `casimir --help`.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,       ///< unknown flag, malformed value, missing subcommand
  kDomain = 3,      ///< value out of range (a <= 0, l <= 0, m < 5, ...)
  kQuadrature = 4,  ///< adaptive quadrature failed to converge
  kTailBound = 5,   ///< lattice remainder could not be certified
  kThreshold = 6,   ///< spectral density requested on a lattice threshold
  kInput = 7,       ///< unreadable or malformed --from-pressure document
};

inline constexpr int kSchemaVersion = 1;

/// Runs the tool on `args` (without the program name), writing results to
/// `out` and diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
