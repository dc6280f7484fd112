#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hamwalk::cli {

// Runs the command-line tool on args (program name excluded), writing to the
// given streams.  Returns the process exit code: 0 on success, 1 for domain
// errors (the error name goes to err as "Name: message"), 2 for usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamwalk::cli
