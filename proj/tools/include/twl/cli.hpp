#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twl::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,
  kUsage = 2,
  kBudget = 3,
  kIo = 4,
};

/// Runs one invocation of the twl tool. `args` excludes the program name.
/// Report output goes to `out` (or to --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twl::cli
