#pragma once

#include <string>
#include <vector>

namespace cuntz::cli {

// Runs the command line tool; args excludes the program name.
// Exit codes: 0 success, 2 input error, 3 computational failure.
int run(const std::vector<std::string>& args);

} // namespace cuntz::cli
