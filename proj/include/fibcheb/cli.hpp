#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibcheb::cli {

// Runs one command line (without the program name).  Reports go to `out`,
// diagnostics to `err`.  Returns the process exit code: 0 all verified-family
// checks pass, 1 at least one verified-family failure, 2 usage error.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fibcheb::cli
