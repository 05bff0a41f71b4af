#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ktrace {

// Runs one CLI invocation.  `args` excludes the program name.  Returns the
// process exit code: 0 on success, 1 when a cross-route check fails, 2 on
// bad input.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ktrace
