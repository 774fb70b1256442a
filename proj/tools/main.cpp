#include <iostream>

#include "powerful/cli.hpp"

int main(int argc, char** argv) {
  return powerful::run_cli(argc, argv, std::cout, std::cerr);
}
