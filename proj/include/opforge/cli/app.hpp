#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opforge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

/// Runs the operad-forge command line; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opforge::cli
