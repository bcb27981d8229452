#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvelab {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  exit_ok = 0,
  /// bad arguments, malformed curve file, unreadable or unwritable path
  exit_usage = 1,
  /// a numeric degeneracy; a JSON diagnostic goes to the error stream
  exit_degenerate = 2,
  /// gauss-bonnet residual above --tol-residual
  exit_residual = 3,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvelab
