#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittkit {

// Runs one CLI invocation (argv without the program name) against the
// given streams. Exit codes: 0 success/PASS, 1 usage error, 2 computation
// or input error, 3 theorem/consistency violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wittkit
