#include <iostream>
#include <string>
#include <vector>

#include "wedderburn/cli.hpp"

int main(int argc, char** argv) {
  return wedderburn::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
