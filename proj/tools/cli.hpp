#ifndef TANGENCY_TOOLS_CLI_HPP
#define TANGENCY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tangency::cli {

enum Exit { ok = 0, property_failed = 1, usage = 2 };

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tangency::cli

#endif
