// coreideal <command> <spec> [flags]
//
// Exit codes: 0 ok, 1 usage or parse error, 2 theorem violation,
// 3 genericity failure.

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return coreideal::cli::run({argv, argv + argc}, std::cout, std::cerr);
}
