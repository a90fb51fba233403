#pragma once

#include <string>
#include <vector>

namespace fss::cli {

// Runs the command line given the arguments after the program name.
// Returns the process exit code: 0 ok, 2 input error, 3 pipeline error.
int run(const std::vector<std::string>& args);

}  // namespace fss::cli
