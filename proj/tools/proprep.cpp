#include <iostream>

#include "proprep/cli.hpp"

int main(int argc, char** argv) {
  return proprep::cli::run(argc, argv, std::cout, std::cerr);
}
