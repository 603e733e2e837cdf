#pragma once

#include <iosfwd>

namespace bicumulant::cli {

/// Exit codes.
constexpr int exit_pass = 0;
constexpr int exit_violated = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

/// Runs the command line `argv` writing results to `out` and diagnostics to
/// `err`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bicumulant::cli
