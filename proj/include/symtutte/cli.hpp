#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symtutte {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitMismatch = 3,
  kExitTheoremViolation = 4,
};

/// Runs the command line `args` (without the program name). Arrangement
/// input is read from --file or, when absent, from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace symtutte
