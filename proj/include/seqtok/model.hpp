// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Shared vocabulary: spans, token kinds, tokens, configuration and reports.

#ifndef SEQTOK_MODEL_HPP_
#define SEQTOK_MODEL_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqtok {

// Half-open byte range [start, end) into a UTF-8 source text.
class Span {
 public:
  // Throws std::invalid_argument unless start < end.
  Span(std::size_t start, std::size_t end);

  std::size_t start() const { return start_; }
  std::size_t end() const { return end_; }
  std::size_t size() const { return end_ - start_; }

  bool operator==(const Span&) const = default;

 private:
  std::size_t start_;
  std::size_t end_;
};

enum class TokenKind : std::uint8_t { Word, Ip, Email, Url, Date };

inline constexpr std::array<TokenKind, 4> kSpecialKinds = {
    TokenKind::Ip, TokenKind::Email, TokenKind::Url, TokenKind::Date};

// Lower-case name used in configuration files and reports ("word", "ip", ...).
std::string_view kind_name(TokenKind kind);
std::optional<TokenKind> kind_from_name(std::string_view name);

// Small value set of token kinds.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<TokenKind> kinds) {
    for (TokenKind k : kinds) insert(k);
  }

  static constexpr KindSet all_special() {
    return {TokenKind::Ip, TokenKind::Email, TokenKind::Url, TokenKind::Date};
  }

  constexpr void insert(TokenKind k) { bits_ |= bit(k); }
  constexpr void erase(TokenKind k) { bits_ &= static_cast<std::uint8_t>(~bit(k)); }
  constexpr bool contains(TokenKind k) const { return (bits_ & bit(k)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool operator==(const KindSet&) const = default;

 private:
  static constexpr std::uint8_t bit(TokenKind k) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

class Token {
 public:
  // Copies the slice of `source` at `span`. Throws std::out_of_range when the
  // span does not fit inside the source.
  Token(TokenKind kind, Span span, std::string_view source);

  TokenKind kind() const { return kind_; }
  const Span& span() const { return span_; }
  const std::string& text() const { return text_; }

  // Same token with its span moved `delta` bytes to the right.
  Token shifted(std::size_t delta) const;

  bool operator==(const Token&) const = default;

 private:
  TokenKind kind_;
  Span span_;
  std::string text_;
};

enum class Action : std::uint8_t { Preserve, Remove };

std::string_view action_name(Action action);

struct SequenceRule {
  TokenKind kind = TokenKind::Ip;
  bool enabled = true;
  Action action = Action::Preserve;

  bool operator==(const SequenceRule&) const = default;
};

// One rule per special kind, always in kSpecialKinds order.
class Config {
 public:
  Config();

  const SequenceRule& rule(TokenKind kind) const;
  SequenceRule& rule(TokenKind kind);
  const std::array<SequenceRule, 4>& rules() const { return rules_; }

  KindSet enabled_kinds() const;
  // Enabled kinds whose action is Remove.
  KindSet removed_kinds() const;

  bool keep_punctuation = false;
  bool tag_output = false;
  bool stats_enabled = true;
  std::optional<std::string> output_path;

  bool operator==(const Config&) const = default;

 private:
  std::array<SequenceRule, 4> rules_;
};

struct TermCount {
  std::string term;
  std::size_t count = 0;

  bool operator==(const TermCount&) const = default;
};

struct StatsReport {
  static constexpr std::size_t kTopTermsLimit = 10;

  std::size_t total_tokens = 0;
  std::size_t word_tokens = 0;
  // Indexed in kSpecialKinds order: ip, email, url, date.
  std::array<std::size_t, 4> per_kind{};
  std::size_t unique_tokens = 0;
  std::vector<TermCount> top_terms;

  std::size_t count(TokenKind kind) const;

  bool operator==(const StatsReport&) const = default;
};

// Position of a special kind inside kSpecialKinds. Word is not special.
std::size_t special_index(TokenKind kind);

}  // namespace seqtok

#endif  // SEQTOK_MODEL_HPP_
