#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qchar {

// Runs the qchar command line with the given arguments (no program name).
// Returns the process exit code: 0 success, 1 check failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qchar
