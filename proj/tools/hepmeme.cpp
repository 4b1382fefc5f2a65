#include <iostream>

#include "hepmeme/cli.hpp"

int main(int argc, char** argv) {
  return hepmeme::cli::run(argc, argv, std::cout, std::cerr);
}
