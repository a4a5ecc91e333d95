#pragma once

/// @file cli.hpp
/// The icg-energy command line, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace icg::cli {

enum ExitCode : int {
    Ok = 0,
    InternalError = 1,
    ValidationFailure = 2,
    GuardRefused = 3,
    VerificationFailed = 4,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"hp", "--p", "3", "--s", "3", "--a", "0,1,2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace icg::cli
