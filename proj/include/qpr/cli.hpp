#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpr {

// exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid input
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpr
