#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freegen {

/// Runs one CLI invocation (argv without the program name) against the given
/// streams. Exit codes: 0 for a definitive positive answer, 1 for a
/// definitive negative one (NotCovered, NotMember, collision found), 2 for
/// usage errors, unparseable input, or an inconclusive decode.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace freegen
