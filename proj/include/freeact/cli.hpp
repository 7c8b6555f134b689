#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freeact {

// Runs one CLI invocation (args exclude the program name) against the given
// streams. Exit codes: 0 success, 1 oracle-check disagreement, 2 usage
// error, 3 cap exceeded. Errors print a single line on err and nothing on
// out.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace freeact
