#include <iostream>

#include "dblgpd/cli.hpp"

int main(int argc, char** argv) {
  return dblgpd::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
