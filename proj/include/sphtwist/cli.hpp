#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sphtwist {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,          // success, or a query answered true
  kExitFalse = 1,       // a query answered false, or a refutation
  kExitUsage = 2,       // bad arguments or malformed input
  kExitComputation = 3, // the computation could not be carried out
};

/// Runs the tool on args (without the program name), writing the report to
/// out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphtwist
