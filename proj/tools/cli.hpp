#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partalg::cli {

enum ExitCode : int {
    kOk = 0,
    kFalse = 1,
    kUsage = 2,
    kCapExceeded = 3,
};

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partalg::cli
