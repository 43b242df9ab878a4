#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gyro::cli {

/// Exit codes shared by every subcommand.
enum Exit : int {
    kPass = 0,
    kAssertionFailed = 1,
    kInputError = 2,
    kGeneratorExhausted = 3,
};

/// Runs the `gyro` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gyro::cli
