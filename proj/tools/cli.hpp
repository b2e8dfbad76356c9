#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aklab::cli {

// Parses and executes one invocation. args excludes the program name.
// Returns the process exit status: 0 on success (help included), 2 on any
// parse or domain error, with a single-line diagnostic on err.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}
