#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcong::cli {

// Runs one invocation (args exclude the program name). Exit codes: 0 success
// or true verdict, 1 false verdict, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcong::cli
