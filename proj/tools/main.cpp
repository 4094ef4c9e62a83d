#include "options.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return conicqed::cli::main_entry(argc, argv, std::cout, std::cerr);
}
