// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Literal trigger substrings per special kind, located with the
// fingerprint matcher. Every grammar-valid match of a kind contains at
// least one of its anchors.

#ifndef SEQTOK_ANCHORS_HPP_
#define SEQTOK_ANCHORS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "seqtok/model.hpp"
#include "seqtok/rabin_karp.hpp"

namespace seqtok {

struct AnchorSet {
  // Literals per special kind, in kSpecialKinds order.
  std::array<std::vector<std::string>, 4> literals;

  const std::vector<std::string>& of(TokenKind kind) const {
    return literals[special_index(kind)];
  }

  // ip "."; email "@"; url "http://" "https://" "ftp://" "www."; date "/" "-" ".".
  static AnchorSet standard();
};

struct Anchor {
  TokenKind kind;
  std::size_t offset;

  bool operator==(const Anchor&) const = default;
};

// Matches anchors case-insensitively (ASCII) so upper-case schemes are found.
class AnchorScanner {
 public:
  explicit AnchorScanner(const AnchorSet& anchors);

  // Occurrences of every enabled kind's literals, ascending by offset; at
  // equal offsets ordered by kind (ip, email, url, date).
  std::vector<Anchor> find(std::string_view text, KindSet enabled,
                           rk::ReadCounter* counter = nullptr) const;

 private:
  rk::MultiPatternMatcher matcher_;
};

std::vector<Anchor> find_anchors(std::string_view text, const AnchorSet& anchors,
                                 KindSet enabled);

// Scanner over AnchorSet::standard(), built once.
const AnchorScanner& standard_anchor_scanner();

}  // namespace seqtok

#endif  // SEQTOK_ANCHORS_HPP_
