#include <iostream>

#include "qfg/cli.hpp"

int main(int argc, char** argv) {
  return qfg::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
