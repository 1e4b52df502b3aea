#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace satfrac::cli {

/// Exit codes shared by every verb.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,       ///< operation error; `check`: not saturated; `verify`: not connected
  kUsage = 2,         ///< unknown verb or bad flags; `check`: malformed input
  kDisagreement = 3,  ///< `check --oracle`: cycle and determinant tests disagree
};

/// Runs one command line (without the program name). Reads fraction input
/// from `in` when the file argument is "-" or omitted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace satfrac::cli
