#pragma once

#include <ostream>

namespace wdg {

// Runs the acceptance checks, printing one PASS/FAIL line per criterion.
// Returns true iff everything passed.
bool run_selftest(std::ostream& out);

}  // namespace wdg
