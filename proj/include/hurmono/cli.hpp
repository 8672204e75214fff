#ifndef HURMONO_CLI_HPP
#define HURMONO_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hurmono::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kGuardExceeded = 3,
  kInternalError = 4,
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hurmono::cli

#endif  // HURMONO_CLI_HPP
