// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SEQTOK_STATS_HPP_
#define SEQTOK_STATS_HPP_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include "seqtok/model.hpp"

namespace seqtok {

enum class StatsFormat { Text, Json };

// Incremental counterpart of compute_stats for streamed input.
class StatsAccumulator {
 public:
  void add(const Token& token);
  StatsReport report() const;
  // Every distinct token text seen so far with its count.
  const std::unordered_map<std::string, std::size_t>& frequencies() const {
    return frequencies_;
  }

 private:
  StatsReport counts_;
  std::unordered_map<std::string, std::size_t> frequencies_;
};

// Counts over the emitted tokens; `text` is the document they came from.
// Top terms are the ten most frequent texts, ties in ascending byte order.
StatsReport compute_stats(std::span<const Token> tokens, std::string_view text);

// Json: one object, fixed key order, no insignificant whitespace, trailing
// newline. Text: an aligned two-column table.
std::string render_stats(const StatsReport& report, StatsFormat format);

}  // namespace seqtok

#endif  // SEQTOK_STATS_HPP_
