#include "logcert/cli/dispatch.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return logcert::cli_dispatch(args, std::cout, std::cerr);
}
