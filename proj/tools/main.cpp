#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  const auto result = rootpoly::cli::run({argv + 1, argv + argc});
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
