#pragma once

#include <ostream>

namespace harmoniter::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsage = 2,
    kResource = 3,
    kCheckpoint = 4,
};

// Parses argv and runs one subcommand (eval, scan, gamma, check).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmoniter::cli
