#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace brickwall {

// Runs the command line tool. args[0] is the program name. Exit codes: 0 on
// success, 1 for rule diagnostics and generation failures, 2 for usage errors
// (malformed flags, unknown rule or brick).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
