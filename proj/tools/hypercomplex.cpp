#include <iostream>

#include "hypercomplex/cli.hpp"

int main(int argc, char** argv) {
  return hypercomplex::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
