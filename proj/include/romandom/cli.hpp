#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace romandom::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kGuard = 3,
  kInput = 4,
  kInternal = 70,
};

/// Entry point behind the `romandom` binary. `args` excludes the program
/// name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace romandom::cli
