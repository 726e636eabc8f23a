// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "seqtok/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return seqtok::cli::run(args, std::cout, std::cerr);
}
