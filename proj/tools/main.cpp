#include <string>
#include <vector>

#include "braidforge/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return braidforge::run(args).exit_code;
}
