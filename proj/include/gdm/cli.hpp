#pragma once
// Command-line surface. Exit codes: 0 success/found/feasible, 1 failure to
// construct / not found / obstruction / verification failure, 2 construction
// not covered, 3 invalid input, 4 search budget exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace gdm {

// `args` excludes the program name. Data goes to `out`, human-readable
// summaries and errors to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gdm
