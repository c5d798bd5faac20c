#include <iostream>
#include <string>
#include <vector>

#include "ryuo_tools/cli.h"

int main(int argc, char** argv) {
  return ryuo::tools::RunCli(std::vector<std::string>(argv + 1, argv + argc),
                             std::cout, std::cerr);
}
