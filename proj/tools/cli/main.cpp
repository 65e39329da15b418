#include <iostream>

#include "app.hpp"

int main(int argc, char** argv) {
  return hdet::cli::run_cli(argc, argv, std::cout, std::cerr);
}
