#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mixnull {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,  ///< verified violation or impossible request
  kExitUsage = 2,      ///< usage, parse or scope error
  kExitInternal = 70,  ///< internal consistency failure
};

/// Runs one command line (args excludes the program name). stdin is read
/// from `in` wherever a path is "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mixnull
