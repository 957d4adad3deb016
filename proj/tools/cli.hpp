#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algq::cli {

// Dispatches one command line (without the program name). Returns the exit
// code: 0 success, 1 for a failed check, 2 for malformed input or usage.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace algq::cli
