#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgisect::cli {

// Runs one `sgisect` subcommand. `args` excludes the program name.
// Returns 0 (satisfiable / valid / success), 1 (empty / invalid) or
// 2 (usage or input error).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace sgisect::cli
