#include <iostream>

#include "qgraph/io.hpp"

int main(int argc, char** argv) {
  return qgraph::run_cli(argc, argv, std::cout, std::cerr);
}
