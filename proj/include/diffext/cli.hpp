#pragma once

#include <string>
#include <vector>

namespace diffext {

// Full command-line driver. args excludes the program name. Writes reports to
// stdout and problems to stderr. Returns the process exit code: 0 when every
// case passes, 1 when any case fails, 2 on usage or configuration errors.
int run_cli(const std::vector<std::string>& args);

}  // namespace diffext
