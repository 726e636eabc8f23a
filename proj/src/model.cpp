// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/model.hpp"

#include <stdexcept>

namespace seqtok {

Span::Span(std::size_t start, std::size_t end) : start_(start), end_(end) {
  if (start >= end) {
    throw std::invalid_argument("span must be non-empty: [" +
                                std::to_string(start) + ", " +
                                std::to_string(end) + ")");
  }
}

std::string_view kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "word";
    case TokenKind::Ip: return "ip";
    case TokenKind::Email: return "email";
    case TokenKind::Url: return "url";
    case TokenKind::Date: return "date";
  }
  return "unknown";
}

std::optional<TokenKind> kind_from_name(std::string_view name) {
  for (TokenKind k : {TokenKind::Word, TokenKind::Ip, TokenKind::Email,
                      TokenKind::Url, TokenKind::Date}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view action_name(Action action) {
  return action == Action::Remove ? "remove" : "preserve";
}

std::size_t special_index(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ip: return 0;
    case TokenKind::Email: return 1;
    case TokenKind::Url: return 2;
    case TokenKind::Date: return 3;
    case TokenKind::Word: break;
  }
  throw std::invalid_argument("word is not a special sequence kind");
}

Token::Token(TokenKind kind, Span span, std::string_view source)
    : kind_(kind), span_(span) {
  if (span.end() > source.size()) {
    throw std::out_of_range("token span exceeds source length");
  }
  text_.assign(source.substr(span.start(), span.size()));
}

Token Token::shifted(std::size_t delta) const {
  Token t = *this;
  t.span_ = Span(span_.start() + delta, span_.end() + delta);
  return t;
}

Config::Config() {
  for (std::size_t i = 0; i < kSpecialKinds.size(); ++i) {
    rules_[i].kind = kSpecialKinds[i];
  }
}

const SequenceRule& Config::rule(TokenKind kind) const {
  return rules_[special_index(kind)];
}

SequenceRule& Config::rule(TokenKind kind) { return rules_[special_index(kind)]; }

KindSet Config::enabled_kinds() const {
  KindSet set;
  for (const auto& r : rules_) {
    if (r.enabled) set.insert(r.kind);
  }
  return set;
}

KindSet Config::removed_kinds() const {
  KindSet set;
  for (const auto& r : rules_) {
    if (r.enabled && r.action == Action::Remove) set.insert(r.kind);
  }
  return set;
}

std::size_t StatsReport::count(TokenKind kind) const {
  if (kind == TokenKind::Word) return word_tokens;
  return per_kind[special_index(kind)];
}

}  // namespace seqtok
