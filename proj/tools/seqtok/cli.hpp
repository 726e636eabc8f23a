// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEQTOK_TOOLS_CLI_HPP_
#define SEQTOK_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace seqtok::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs the seqtok command line. `args` excludes the program name. Token or
// filtered-text output goes to files; statistics go to `out`, diagnostics
// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqtok::cli

#endif  // SEQTOK_TOOLS_CLI_HPP_
