#ifndef SIGMA_CLI_HPP
#define SIGMA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sigma {

// Runs one CLI invocation (args excludes the program name). Returns
// the process exit code: 0 success, 1 domain error, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigma

#endif
