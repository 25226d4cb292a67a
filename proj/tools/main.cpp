#include <iostream>

#include "sidonplex/cli.hpp"

int main(int argc, char** argv) {
  return sidonplex::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
