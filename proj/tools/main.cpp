#include <cstdlib>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return hmflab::run_cli(argc, argv, std::cout, std::cerr, std::getenv("HMFLAB_JOBS"));
}
