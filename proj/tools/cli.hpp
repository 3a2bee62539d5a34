#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace burau::cli {

// Runs the command line `args` (without the program name). Returns 0 on
// success, 1 on a domain error (e.g. the singleton point), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace burau::cli
