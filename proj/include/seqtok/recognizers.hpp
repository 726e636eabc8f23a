// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Anchored maximal-munch recognizers for the four special sequence kinds.
//
// Each recognizer answers: does a match of its kind begin exactly at `pos`,
// and if so, what is the longest one? Callers are expected to consult them
// only where is_start_boundary(text, pos) holds.
//
// Grammars (ASCII only):
//   ip     four groups of 1-3 digits joined by '.', each <= 255, leading
//          zeros allowed. Rejected when followed by an alphanumeric byte or
//          by '.' and a digit.
//   email  local '@' domain. Local part is 1-64 chars of [A-Za-z0-9._%+-]
//          without a leading or trailing '.' and without "..". Domain is 2+
//          labels of 1-63 chars [A-Za-z0-9-] joined by '.', no label starts
//          or ends with '-', final label alphabetic with length >= 2.
//   url    (http|https|ftp)"://" host [':' digits] [path], or "www." domain
//          [path]. Host is a domain or an IPv4 literal. Path is '/' followed
//          by [A-Za-z0-9._~!$&'()*+,;=:@%/?#-]*. Scheme and "www." prefix
//          compare case-insensitively.
//   date   day SEP month SEP year, day 1-31 and month 1-12 in 1-2 digits,
//          year 2 or 4 digits, SEP one of '/', '-', '.' used twice. Rejected
//          when followed by an alphanumeric byte.
//
// Email and URL matches have trailing closers (. , ; : ! ? )) stripped.

#ifndef SEQTOK_RECOGNIZERS_HPP_
#define SEQTOK_RECOGNIZERS_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "seqtok/model.hpp"

namespace seqtok {

inline constexpr std::size_t kMaxEmailLocalLength = 64;
inline constexpr std::size_t kMaxDomainLabelLength = 63;

// True iff pos == 0 or the character before pos is neither a word character
// nor one of . @ - _ % +
bool is_start_boundary(std::string_view text, std::size_t pos);

std::optional<Span> recognize_ip(std::string_view text, std::size_t pos);
std::optional<Span> recognize_email(std::string_view text, std::size_t pos);
std::optional<Span> recognize_url(std::string_view text, std::size_t pos);
std::optional<Span> recognize_date(std::string_view text, std::size_t pos);

// Dispatches to the recognizer for a special kind.
std::optional<Span> recognize(TokenKind kind, std::string_view text,
                              std::size_t pos);

struct Match {
  TokenKind kind;
  Span span;

  bool operator==(const Match&) const = default;
};

// Priority when two kinds match with equal length: Url > Email > Ip > Date.
int kind_priority(TokenKind kind);

// True if `a` should win over `b` when both start at the same position.
bool preferred(const Match& a, const Match& b);

// Longest match among the enabled kinds at pos, ties broken by priority.
std::optional<Match> best_match(std::string_view text, std::size_t pos,
                                KindSet enabled);

}  // namespace seqtok

#endif  // SEQTOK_RECOGNIZERS_HPP_
