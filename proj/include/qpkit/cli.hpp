#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpkit {

// Command-line front end; returns the process exit code. Exit codes: 0 for
// success (and Finite verdicts), 1 for I/O or usage errors, 2 for Infinite,
// 3 for Inconclusive, 4 for a failed differential check, 5 for a
// reproduction mismatch.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Built-in inputs of the reproduction command.
std::string builtin_example_input();
std::string builtin_golden();

}  // namespace qpkit
