// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/anchors.hpp"

#include <algorithm>

namespace seqtok {

namespace {

std::vector<rk::MultiPatternMatcher::Pattern> to_patterns(const AnchorSet& a) {
  std::vector<rk::MultiPatternMatcher::Pattern> out;
  for (TokenKind kind : kSpecialKinds) {
    for (const auto& lit : a.of(kind)) {
      out.push_back({lit, static_cast<int>(kind)});
    }
  }
  return out;
}

}  // namespace

AnchorSet AnchorSet::standard() {
  AnchorSet set;
  set.literals[special_index(TokenKind::Ip)] = {"."};
  set.literals[special_index(TokenKind::Email)] = {"@"};
  set.literals[special_index(TokenKind::Url)] = {"http://", "https://", "ftp://",
                                                 "www."};
  set.literals[special_index(TokenKind::Date)] = {"/", "-", "."};
  return set;
}

AnchorScanner::AnchorScanner(const AnchorSet& anchors)
    : matcher_(to_patterns(anchors), rk::CaseMode::AsciiFold) {}

std::vector<Anchor> AnchorScanner::find(std::string_view text, KindSet enabled,
                                        rk::ReadCounter* counter) const {
  const auto hits = matcher_.scan(
      text,
      [enabled](int tag) { return enabled.contains(static_cast<TokenKind>(tag)); },
      counter);
  std::vector<Anchor> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back({static_cast<TokenKind>(h.tag), h.offset});
  // Hits come ordered by offset, then registration order, which is kind
  // order. Duplicate literals within one kind collapse to a single anchor.
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Anchor> find_anchors(std::string_view text, const AnchorSet& anchors,
                                 KindSet enabled) {
  return AnchorScanner(anchors).find(text, enabled);
}

const AnchorScanner& standard_anchor_scanner() {
  static const AnchorScanner scanner(AnchorSet::standard());
  return scanner;
}

}  // namespace seqtok
