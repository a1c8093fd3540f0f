#pragma once

#include <string>

namespace armred {

// Runs the built-in desk-scale acceptance suite and appends one PASS/FAIL
// line per check to `report`. Returns the number of failed checks.
int run_selftest(std::string& report);

}  // namespace armred
