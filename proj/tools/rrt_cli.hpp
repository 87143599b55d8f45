#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rrt::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kParse = 2,
    kPrecondition = 3,
    kViolation = 4,
    kIo = 5,
};

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace rrt::cli
