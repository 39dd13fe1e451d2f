#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wdg {

// Exit codes: 0 success, 1 violations/mismatch/failed assertion,
// 2 inconclusive (iso/theorem), 3 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wdg
