#ifndef HOMKIT_CLI_HPP
#define HOMKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace homkit {

/**
 * Runs one command line (program name excluded) and writes the report to
 * `out`, diagnostics to `err`. Returns 0 when every check passes, 1 when a
 * check fails, 2 on a usage or input error.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homkit

#endif  // HOMKIT_CLI_HPP
