#include <iostream>

#include "pcount/cli.hpp"

int main(int argc, char** argv) {
  return pcount::cli::run(argc, argv, std::cout, std::cerr);
}
