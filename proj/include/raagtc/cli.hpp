#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace raagtc {

// Runs one CLI invocation. args excludes the program name. Results go to
// out, diagnostics to err, '-' graph paths read from in. Exit codes:
// 0 success, 1 domain error (bad r, capacity, usage), 2 parse error,
// 3 lemma verification failure.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

} // namespace raagtc
