#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dqpt::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kArgumentError = 2,
    kToleranceBreach = 3,
    kResourceGuard = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dqpt::cli
