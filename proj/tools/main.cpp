// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <string>
#include <vector>

#include "frank/cli.hpp"

int main(int argc, char** argv) {
  return frank::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
