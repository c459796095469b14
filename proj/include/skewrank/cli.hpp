#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace skewrank {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInvariant = 3,
  kExitCounterexample = 4,
};

/// Command-line entry point. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace skewrank
