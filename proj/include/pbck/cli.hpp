#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbck {

// runs the command-line front end on `args` (without the program name).
// returns the process exit status: 0 = all checks passed, 1 = a check
// failed, 2 = bad input (parse error, malformed structure, bad usage).
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbck
