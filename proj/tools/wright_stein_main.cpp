#include <iostream>

#include "wright_stein/cli.hpp"

int main(int argc, char** argv) {
  return wright_stein::cli::run(argc, argv, std::cout, std::cerr);
}
