#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ivr::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,       // bad flags or parameter-domain violation
    kIo = 3,          // unreadable input or unwritable output
    kDegenerate = 4,  // data that cannot support the requested statistic
};

// Runs the command line (args excludes the program name). Reports go to out,
// diagnostics to err. Never throws.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivr::cli
