// Command-line front end for symgb.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symgb::cli {

enum ExitCode : int {
  kVerified = 0,
  kMismatch = 1,
  kUsage = 2,
};

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symgb::cli
