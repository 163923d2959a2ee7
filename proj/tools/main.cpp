#include <iostream>

#include "ehrtri/cli.hpp"

int main(int argc, char** argv) {
  return ehrtri::run_cli(argc, argv, std::cout, std::cerr);
}
