#include <iostream>
#include <string>
#include <vector>

#include "btlat/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return btlat::runCli(args, std::cout, std::cerr);
}
