#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wedderburn::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kIoError = 2,
  kStructuralError = 3,
};

/// Runs `decompose`, `generate` or `verify`. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wedderburn::cli
