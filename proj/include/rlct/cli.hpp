#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rlct::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kValidation = 2,
  kCapExceeded = 3,
  kIo = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --out names a file; errors go to `err` as one JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlct::cli
