#ifndef D2DCACHE_CLI_HPP
#define D2DCACHE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace d2d::cli {

// Runs one CLI invocation (args exclude the program name). Returns the
// process exit code: 0 success, 1 validation error, 2 runtime error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace d2d::cli

#endif  // D2DCACHE_CLI_HPP
