#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotord {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,  // usage, parse or validity error
  kExitCheckFailed = 2,
  kExitDataError = 3,
};

// Entry point of the command line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotord
