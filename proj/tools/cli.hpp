#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sopq {

/// Exit codes: 0 success, 1 verification failure, 2 invalid config, 3 numeric abort.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sopq
