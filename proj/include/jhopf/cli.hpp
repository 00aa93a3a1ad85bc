#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jhopf::cli {

/* Executes one command line (arguments without the program name), writing
   results to out and diagnostics to err.  Returns the process exit code:
   0 when every executed check passed (skipped checks do not fail a run),
   1 when any check failed, 2 on usage or input errors. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jhopf::cli
