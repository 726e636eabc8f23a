// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/stats.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace seqtok {

void StatsAccumulator::add(const Token& token) {
  ++counts_.total_tokens;
  if (token.kind() == TokenKind::Word) {
    ++counts_.word_tokens;
  } else {
    ++counts_.per_kind[special_index(token.kind())];
  }
  ++frequencies_[token.text()];
}

StatsReport StatsAccumulator::report() const {
  StatsReport r = counts_;
  r.unique_tokens = frequencies_.size();

  std::vector<TermCount> terms;
  terms.reserve(frequencies_.size());
  for (const auto& [term, count] : frequencies_) terms.push_back({term, count});
  const auto by_rank = [](const TermCount& a, const TermCount& b) {
    return a.count != b.count ? a.count > b.count : a.term < b.term;
  };
  const std::size_t keep = std::min(terms.size(), StatsReport::kTopTermsLimit);
  std::partial_sort(terms.begin(), terms.begin() + keep, terms.end(), by_rank);
  terms.resize(keep);
  r.top_terms = std::move(terms);
  return r;
}

StatsReport compute_stats(std::span<const Token> tokens, std::string_view) {
  StatsAccumulator acc;
  for (const Token& t : tokens) acc.add(t);
  return acc.report();
}

namespace {

std::string render_json(const StatsReport& r) {
  nlohmann::ordered_json j;
  j["total_tokens"] = r.total_tokens;
  j["word_tokens"] = r.word_tokens;
  for (TokenKind kind : kSpecialKinds) {
    j[std::string(kind_name(kind))] = r.count(kind);
  }
  j["unique_tokens"] = r.unique_tokens;
  auto top = nlohmann::ordered_json::array();
  for (const auto& t : r.top_terms) {
    nlohmann::ordered_json entry;
    entry["term"] = t.term;
    entry["count"] = t.count;
    top.push_back(std::move(entry));
  }
  j["top_terms"] = std::move(top);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

std::string render_text(const StatsReport& r) {
  std::string out;
  char line[128];
  auto row = [&](const char* label, std::size_t value) {
    std::snprintf(line, sizeof line, "%-14s %10zu\n", label, value);
    out += line;
  };
  row("total_tokens", r.total_tokens);
  row("word_tokens", r.word_tokens);
  for (TokenKind kind : kSpecialKinds) {
    row(std::string(kind_name(kind)).c_str(), r.count(kind));
  }
  row("unique_tokens", r.unique_tokens);
  out += "top_terms\n";
  for (const auto& t : r.top_terms) {
    std::snprintf(line, sizeof line, "  %10zu  ", t.count);
    out += line;
    out += t.term;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string render_stats(const StatsReport& report, StatsFormat format) {
  return format == StatsFormat::Json ? render_json(report) : render_text(report);
}

}  // namespace seqtok
