#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambda_gs {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,
  kExitMismatch = 2,
  kExitCapacity = 3,
};

// Runs the command line without the program name, e.g.
// {"classify-params", "--a", "1", "--b", "2", "--c", "3"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lambda_gs
