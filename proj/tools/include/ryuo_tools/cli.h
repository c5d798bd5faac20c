#ifndef RYUO_TOOLS_CLI_H_
#define RYUO_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace ryuo::tools {

// Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter
// error. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace ryuo::tools

#endif  // RYUO_TOOLS_CLI_H_
