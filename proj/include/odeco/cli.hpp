#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odeco::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,
  kRejected = 3,
  kDegenerate = 4,
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace odeco::cli
