// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations used as test oracles. They share no
// code with the library's scanners: recognizers enumerate every candidate
// length and validate the whole candidate against the grammar productions.

#ifndef SEQTOK_TESTS_ORACLE_REFERENCE_HPP_
#define SEQTOK_TESTS_ORACLE_REFERENCE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqtok/model.hpp"

namespace seqtok::oracle {

bool valid_ipv4(std::string_view s);
bool valid_domain(std::string_view s);
bool valid_email(std::string_view s);
bool valid_url(std::string_view s);
bool valid_date(std::string_view s);

bool boundary(std::string_view text, std::size_t pos);

// Longest match length at pos, if any.
std::optional<std::size_t> ip(std::string_view text, std::size_t pos);
std::optional<std::size_t> email(std::string_view text, std::size_t pos);
std::optional<std::size_t> url(std::string_view text, std::size_t pos);
std::optional<std::size_t> date(std::string_view text, std::size_t pos);
std::optional<std::size_t> recognize(TokenKind kind, std::string_view text,
                                     std::size_t pos);

struct RefMatch {
  TokenKind kind;
  std::size_t start;
  std::size_t end;

  bool operator==(const RefMatch&) const = default;
};

// Left-to-right scan with the reference recognizers.
std::vector<RefMatch> scan(std::string_view text, KindSet enabled);

struct RefToken {
  TokenKind kind;
  std::string text;

  bool operator==(const RefToken&) const = default;
};

std::vector<RefToken> tokenize(std::string_view text, const Config& config);

std::vector<std::size_t> naive_find_all(std::string_view pattern, std::string_view text);

// (kind, offset) for every anchor literal, case-insensitive.
std::vector<std::pair<TokenKind, std::size_t>> naive_anchors(std::string_view text,
                                                             KindSet enabled);

std::map<std::string, std::size_t> frequency_map(const std::vector<std::string>& terms);

}  // namespace seqtok::oracle

#endif  // SEQTOK_TESTS_ORACLE_REFERENCE_HPP_
