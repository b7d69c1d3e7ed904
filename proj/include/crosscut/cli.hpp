#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crosscut {

// Runs the command-line tool. args excludes the program name. Exit codes:
// 0 success / claim verified, 1 false verdict or property violation (witness
// included in the output), 2 usage, file format or hypothesis errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crosscut
