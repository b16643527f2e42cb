#include <iostream>
#include <string>
#include <vector>

#include "epiword/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return epiword::cli::run(args, std::cout, std::cerr, std::cin);
}
