#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symcover::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kEnvironment = 3,
};

/// Runs the symcover command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcover::cli
