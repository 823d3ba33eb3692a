#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rb3::cli {

enum ExitCode : int {
    kPass = 0,
    kCheckFailed = 1,
    kConfigError = 2,
    kDegenerate = 3,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rb3::cli
