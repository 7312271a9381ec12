/**
 * @file cli.hpp
 * @brief Command-line entry point (testable without spawning a process)
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace debtflow::cli {

/// Exit codes: 0 success, 2 input error, 3 infeasible or degenerate
/// model condition (including g <= WAC* under --strict).
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitModelError = 3;

/// Runs `debtflow <subcommand> ...` with explicit streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace debtflow::cli
