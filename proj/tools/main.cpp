// Copyright 2026 the qnnbench authors
// SPDX-License-Identifier: Apache-2.0

#include <string>
#include <vector>

#include "qnnbench/harness.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qnnbench::cli_main(args);
}
