#include <iostream>
#include <string>
#include <vector>

#include "krasner/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return krasner::runCli(args, std::cout, std::cerr);
}
