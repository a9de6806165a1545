#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lf {

// Exit codes: 0 success, 1 check failure, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lf
