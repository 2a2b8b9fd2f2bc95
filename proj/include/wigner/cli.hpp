#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wigner::cli {

// Stable exit codes.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,        // verify found an identity that does not hold
  kUsage = 2,         // parse / config error
  kNotDivergence = 3,
  kGridTooSmall = 4,
  kNumeric = 5,
};

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wigner::cli
