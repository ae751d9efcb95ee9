#include <cstdio>
#include <string>
#include <vector>

#include <parstab/commands.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  parstab::CommandResult res = parstab::run_command(args);
  std::fputs(res.out.c_str(), stdout);
  std::fputs(res.err.c_str(), stderr);
  return res.exit_code;
}
