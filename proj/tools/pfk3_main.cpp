#include "pfk3/cli.hpp"

#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const pfk3::cli::CommandResult result = pfk3::cli::run_command_line(args);
  std::cout << result.output;
  if (!result.diagnostic.empty()) std::cerr << "pfk3: " << result.diagnostic << "\n";
  return result.exit_code;
}
