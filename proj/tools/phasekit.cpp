#include <iostream>
#include <string>
#include <vector>

#include "phasekit/cli.hpp"

int main(int argc, char** argv) {
  return phasekit::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
