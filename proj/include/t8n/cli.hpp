#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace t8n {

/// Runs the command-line front end.  Exit code 0 on success, 1 on errors
/// (parse failures, method disagreement), 2 when a requested decision
/// procedure is not applicable to the set's shape.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace t8n
