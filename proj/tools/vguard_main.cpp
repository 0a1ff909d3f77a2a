#include <iostream>

#include "vguard/cli.hpp"

int main(int argc, char** argv) {
  return vguard::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
