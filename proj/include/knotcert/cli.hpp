#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotcert {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitInternal = 3,
};

/// Runs the command line tool on `args` (without the program name). Results
/// go to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace knotcert
