#include <iostream>

#include "qsep/cli.hpp"

int main(int argc, char** argv) {
  return qsep::cli::run_cli(argc, argv, std::cout, std::cerr);
}
