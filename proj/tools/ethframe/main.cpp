#include <iostream>

#include "ethframe/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return ethframe::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
