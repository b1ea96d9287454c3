#include <iostream>

#include "modgroup/cli.hpp"

int main(int argc, char** argv) {
  using namespace modgroup::cli;
  Command cmd;
  try {
    cmd = parse_command(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  }
  Report r = run(cmd);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
