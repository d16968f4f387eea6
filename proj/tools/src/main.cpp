#include <iostream>

#include "p2lsg/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return p2lsg::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
