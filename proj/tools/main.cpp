#include <unistd.h>

#include <cstdlib>
#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  adapt_meter::cli::Terminal terminal;
  terminal.color =
      ::isatty(STDOUT_FILENO) != 0 && std::getenv("ADAPT_METER_NO_COLOR") == nullptr;
  std::vector<std::string> args(argv, argv + argc);
  return adapt_meter::cli::run(args, std::cout, std::cerr, terminal);
}
