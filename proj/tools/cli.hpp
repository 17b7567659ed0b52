#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dpz::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInputError = 2, kUndecided = 3 };

// Runs the dpz command line. `args` excludes the program name. `height_env` is the value of
// DPZ_HEIGHT_BOUND (nullptr when unset).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const char* height_env = nullptr);

}  // namespace dpz::cli
