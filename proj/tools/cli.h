// Command-line front end. Kept out of main() so tests can drive it.
//
// Exit codes: 0 success / expected verdict, 1 unexpected verdict or
// failed check, 2 usage or load errors.

#ifndef HYPERIGN_TOOLS_CLI_H_
#define HYPERIGN_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperign::cli {

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperign::cli

#endif  // HYPERIGN_TOOLS_CLI_H_
