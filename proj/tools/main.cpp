#include <iostream>

#include "fanoturan/cli.hpp"

int main(int argc, char** argv) {
  return fanoturan::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
