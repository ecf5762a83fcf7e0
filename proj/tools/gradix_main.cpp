#include <iostream>

#include "gradix/cli.hpp"

int main(int argc, char** argv) {
  return gradix::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
