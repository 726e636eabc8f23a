// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/tokenizer.hpp"

#include <algorithm>

#include "seqtok/anchors.hpp"
#include "seqtok/text.hpp"

namespace seqtok {

namespace {

unsigned char at(std::string_view s, std::size_t i) {
  return static_cast<unsigned char>(s[i]);
}

bool is_local_char(unsigned char c) {
  return text::is_ascii_alnum(c) || c == '.' || c == '_' || c == '%' ||
         c == '+' || c == '-';
}

// Characters a kind's match may contain between its start and the first
// occurrence of an anchor.
bool is_lead_char(TokenKind kind, unsigned char c) {
  switch (kind) {
    case TokenKind::Ip:
    case TokenKind::Date: return text::is_ascii_digit(c);
    case TokenKind::Email: return is_local_char(c);
    default: return false;
  }
}

std::vector<Match> scan_direct(std::string_view text, KindSet enabled) {
  std::vector<Match> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_start_boundary(text, pos)) {
      if (auto m = best_match(text, pos, enabled)) {
        out.push_back(*m);
        pos = m->span.end();
        continue;
      }
    }
    ++pos;
  }
  return out;
}

std::vector<Match> scan_anchored(std::string_view text, KindSet enabled) {
  const auto anchors = standard_anchor_scanner().find(text, enabled);

  std::vector<Match> candidates;
  // Walk-back starts are non-decreasing per kind, so remembering the last
  // tried start is enough to avoid re-running a recognizer.
  std::array<std::size_t, 4> last_tried;
  last_tried.fill(static_cast<std::size_t>(-1));

  for (const Anchor& a : anchors) {
    std::size_t start = a.offset;
    const std::size_t floor = a.offset > kMaxAnchorWalk ? a.offset - kMaxAnchorWalk : 0;
    while (start > floor && is_lead_char(a.kind, at(text, start - 1))) --start;
    auto& last = last_tried[special_index(a.kind)];
    if (start == last) continue;
    last = start;
    if (!is_start_boundary(text, start)) continue;
    if (auto span = recognize(a.kind, text, start)) {
      candidates.push_back({a.kind, *span});
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const Match& x, const Match& y) {
              if (x.span.start() != y.span.start()) {
                return x.span.start() < y.span.start();
              }
              return preferred(x, y);
            });

  std::vector<Match> out;
  std::size_t cursor = 0;
  for (const Match& c : candidates) {
    if (c.span.start() < cursor) continue;
    out.push_back(c);
    cursor = c.span.end();
  }
  return out;
}

enum class CharClass { Word, Space, Other };

CharClass classify(const text::Decoded& d) {
  if (text::is_word(d)) return CharClass::Word;
  if (text::is_space(d)) return CharClass::Space;
  return CharClass::Other;
}

// Splits text[from, to) into Word tokens: runs of word characters, plus runs
// of non-space punctuation when keep_punctuation is set.
void split_words(std::string_view text, std::size_t from, std::size_t to,
                 bool keep_punctuation, std::vector<Token>& out) {
  const std::string_view view = text.substr(0, to);
  std::size_t i = from;
  while (i < to) {
    const CharClass cls = classify(text::decode_at(view, i));
    std::size_t j = i;
    while (j < to) {
      const auto d = text::decode_at(view, j);
      if (classify(d) != cls) break;
      j += d.length;
    }
    if (cls == CharClass::Word || (cls == CharClass::Other && keep_punctuation)) {
      out.emplace_back(TokenKind::Word, Span(i, j), text);
    }
    i = j;
  }
}

bool is_space_byte(char c) { return text::is_ascii_space(static_cast<unsigned char>(c)); }

// One excision pass; returns false when nothing was removed.
bool excise_once(std::string_view text, const Config& config,
                 ScanStrategy strategy, std::string& out) {
  const auto matches = scan_special(text, config.enabled_kinds(), strategy);
  const KindSet removed = config.removed_kinds();
  out.clear();
  bool any = false;
  std::size_t cursor = 0;
  for (const Match& m : matches) {
    if (!removed.contains(m.kind)) continue;
    any = true;
    out.append(text.substr(cursor, m.span.start() - cursor));

    std::size_t right = m.span.end();
    const bool left_edge = out.empty();
    const bool right_edge = right == text.size();
    const bool left_ws = !left_edge && is_space_byte(out.back());
    const bool right_ws = !right_edge && is_space_byte(text[right]);

    auto trim_left = [&] {
      while (!out.empty() && is_space_byte(out.back())) out.pop_back();
    };
    auto skip_right = [&] {
      while (right < text.size() && is_space_byte(text[right])) ++right;
    };

    if (left_edge) {
      skip_right();
    } else if (right_edge) {
      trim_left();
    } else if (left_ws && right_ws) {
      trim_left();
      skip_right();
      out.push_back(' ');
    } else if (!left_ws && !right_ws) {
      out.push_back(' ');
    }
    cursor = right;
  }
  if (!any) return false;
  out.append(text.substr(cursor));
  return true;
}

}  // namespace

std::string_view strategy_name(ScanStrategy strategy) {
  return strategy == ScanStrategy::Direct ? "direct" : "anchored";
}

std::optional<ScanStrategy> strategy_from_name(std::string_view name) {
  if (name == "direct") return ScanStrategy::Direct;
  if (name == "anchored") return ScanStrategy::Anchored;
  return std::nullopt;
}

std::vector<Match> scan_special(std::string_view text, KindSet enabled,
                                ScanStrategy strategy) {
  if (text.empty() || enabled.empty()) return {};
  return strategy == ScanStrategy::Direct ? scan_direct(text, enabled)
                                          : scan_anchored(text, enabled);
}

std::vector<Token> tokenize(std::string_view text, const Config& config,
                            ScanStrategy strategy) {
  std::vector<Token> tokens;
  std::size_t cursor = 0;
  for (const Match& m : scan_special(text, config.enabled_kinds(), strategy)) {
    split_words(text, cursor, m.span.start(), config.keep_punctuation, tokens);
    if (config.rule(m.kind).action == Action::Preserve) {
      tokens.emplace_back(m.kind, m.span, text);
    }
    cursor = m.span.end();
  }
  split_words(text, cursor, text.size(), config.keep_punctuation, tokens);
  return tokens;
}

void tokenize_stream(std::istream& in, const Config& config,
                     ScanStrategy strategy,
                     const std::function<void(const Token&)>& sink) {
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    for (const Token& t : tokenize(line, config, strategy)) sink(t.shifted(offset));
    offset += line.size() + 1;
  }
}

std::string filter_text(std::string_view text, const Config& config,
                        ScanStrategy strategy) {
  std::string current(text);
  if (config.removed_kinds().empty()) return current;
  std::string next;
  while (excise_once(current, config, strategy, next)) current.swap(next);
  return current;
}

void append_rendered(std::string& out, const Token& token, bool tag_output) {
  if (tag_output) {
    switch (token.kind()) {
      case TokenKind::Ip: out += "<IP> "; break;
      case TokenKind::Email: out += "<EMAIL> "; break;
      case TokenKind::Url: out += "<URL> "; break;
      case TokenKind::Date: out += "<DATE> "; break;
      case TokenKind::Word: break;
    }
  }
  out += token.text();
  out += '\n';
}

std::string render_tokens(std::span<const Token> tokens, bool tag_output) {
  std::string out;
  for (const Token& t : tokens) append_rendered(out, t, tag_output);
  return out;
}

}  // namespace seqtok
