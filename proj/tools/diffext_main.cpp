#include <string>
#include <vector>

#include "diffext/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return diffext::run_cli(args);
}
