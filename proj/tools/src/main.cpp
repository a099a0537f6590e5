#include <iostream>

#include "distidx/cli/app.hpp"

int main(int argc, char** argv) {
  return distidx::cli::run(argc, argv, std::cout, std::cerr);
}
