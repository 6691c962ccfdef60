#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oldsets::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotLocatable = 3,
  kViolation = 4,
};

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oldsets::cli
