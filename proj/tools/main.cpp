#include "gmet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return gmet::cli::run(argc, argv, std::cout, std::cerr);
}
