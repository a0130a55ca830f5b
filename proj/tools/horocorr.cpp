#include <iostream>

#include "horo/cli.hpp"

int main(int argc, char** argv) {
  return horo::cli::execute(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
