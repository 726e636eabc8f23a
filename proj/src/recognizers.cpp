// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/recognizers.hpp"

#include <algorithm>
#include <array>

#include "seqtok/text.hpp"

namespace seqtok {

namespace {

using text::ascii_lower;
using text::is_ascii_alnum;
using text::is_ascii_alpha;
using text::is_ascii_digit;

unsigned char at(std::string_view s, std::size_t i) {
  return static_cast<unsigned char>(s[i]);
}

bool is_local_char(unsigned char c) {
  return is_ascii_alnum(c) || c == '.' || c == '_' || c == '%' || c == '+' ||
         c == '-';
}

bool is_label_char(unsigned char c) { return is_ascii_alnum(c) || c == '-'; }

bool is_host_char(unsigned char c) { return is_label_char(c) || c == '.'; }

bool is_path_char(unsigned char c) {
  if (is_ascii_alnum(c)) return true;
  switch (c) {
    case '.': case '_': case '~': case '!': case '$': case '&': case '\'':
    case '(': case ')': case '*': case '+': case ',': case ';': case '=':
    case ':': case '@': case '%': case '/': case '?': case '#': case '-':
      return true;
    default:
      return false;
  }
}

bool is_closer(unsigned char c) {
  switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?': case ')':
      return true;
    default:
      return false;
  }
}

std::size_t digit_run(std::string_view s, std::size_t i) {
  std::size_t j = i;
  while (j < s.size() && is_ascii_digit(at(s, j))) ++j;
  return j - i;
}

unsigned digits_value(std::string_view s, std::size_t i, std::size_t n) {
  unsigned v = 0;
  for (std::size_t k = 0; k < n; ++k) v = v * 10 + (at(s, i + k) - '0');
  return v;
}

bool starts_with_folded(std::string_view s, std::size_t pos,
                        std::string_view lower_literal) {
  if (s.size() - pos < lower_literal.size()) return false;
  for (std::size_t k = 0; k < lower_literal.size(); ++k) {
    if (ascii_lower(at(s, pos + k)) !=
        static_cast<unsigned char>(lower_literal[k])) {
      return false;
    }
  }
  return true;
}

// End of the longest prefix of s[start..) that is a valid domain.
std::optional<std::size_t> longest_domain(std::string_view s,
                                          std::size_t start) {
  std::optional<std::size_t> best;
  std::size_t labels_done = 0;
  std::size_t i = start;
  while (true) {
    const std::size_t label_start = i;
    std::size_t j = i;
    while (j < s.size() && is_label_char(at(s, j))) ++j;
    std::size_t alpha = 0;
    while (label_start + alpha < j && is_ascii_alpha(at(s, label_start + alpha))) {
      ++alpha;
    }
    // Any alphabetic prefix of length >= 2 can serve as the final label.
    if (labels_done >= 1 && alpha >= 2) {
      best = label_start + std::min(alpha, kMaxDomainLabelLength);
    }
    const std::size_t len = j - label_start;
    if (len == 0 || len > kMaxDomainLabelLength || at(s, label_start) == '-' ||
        at(s, j - 1) == '-') {
      break;
    }
    if (j < s.size() && at(s, j) == '.') {
      ++labels_done;
      i = j + 1;
      continue;
    }
    break;
  }
  return best;
}

// End of the longest prefix of s[start..) that is a dotted-quad literal,
// without any follower restriction.
std::optional<std::size_t> longest_ipv4_literal(std::string_view s,
                                                std::size_t start) {
  std::size_t i = start;
  for (int group = 0; group < 3; ++group) {
    const std::size_t run = digit_run(s, i);
    if (run == 0 || run > 3 || digits_value(s, i, run) > 255) return std::nullopt;
    i += run;
    if (i >= s.size() || at(s, i) != '.') return std::nullopt;
    ++i;
  }
  const std::size_t run = std::min<std::size_t>(digit_run(s, i), 3);
  for (std::size_t k = run; k >= 1; --k) {
    if (digits_value(s, i, k) <= 255) return i + k;
  }
  return std::nullopt;
}

std::size_t strip_closers(std::string_view s, std::size_t start,
                          std::size_t end) {
  while (end > start && is_closer(at(s, end - 1))) --end;
  return end;
}

std::optional<Span> make_span(std::size_t start, std::size_t end) {
  if (end <= start) return std::nullopt;
  return Span(start, end);
}

}  // namespace

bool is_start_boundary(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  const auto prev = at(text, pos - 1);
  if (prev < 0x80) {
    return !(is_ascii_alnum(prev) || prev == '.' || prev == '@' ||
             prev == '-' || prev == '_' || prev == '%' || prev == '+');
  }
  return !text::is_word(text::decode_before(text, pos));
}

std::optional<Span> recognize_ip(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  for (int group = 0; group < 4; ++group) {
    const std::size_t run = digit_run(text, i);
    if (run == 0 || run > 3 || digits_value(text, i, run) > 255) {
      return std::nullopt;
    }
    i += run;
    if (group < 3) {
      if (i >= text.size() || at(text, i) != '.') return std::nullopt;
      ++i;
    }
  }
  if (i < text.size()) {
    const auto next = at(text, i);
    if (is_ascii_alnum(next)) return std::nullopt;
    if (next == '.' && i + 1 < text.size() && is_ascii_digit(at(text, i + 1))) {
      return std::nullopt;
    }
  }
  return Span(pos, i);
}

std::optional<Span> recognize_email(std::string_view text, std::size_t pos) {
  std::size_t at_sign = pos;
  while (at_sign < text.size() && is_local_char(at(text, at_sign))) ++at_sign;
  if (at_sign >= text.size() || at(text, at_sign) != '@') return std::nullopt;

  const std::string_view local = text.substr(pos, at_sign - pos);
  if (local.empty() || local.size() > kMaxEmailLocalLength ||
      local.front() == '.' || local.back() == '.' ||
      local.find("..") != std::string_view::npos) {
    return std::nullopt;
  }

  const auto domain_end = longest_domain(text, at_sign + 1);
  if (!domain_end) return std::nullopt;
  return make_span(pos, strip_closers(text, at_sign + 1, *domain_end));
}

std::optional<Span> recognize_url(std::string_view text, std::size_t pos) {
  static constexpr std::array<std::string_view, 3> kSchemes = {
      "http://", "https://", "ftp://"};

  std::optional<std::size_t> host_start;
  for (std::string_view scheme : kSchemes) {
    if (starts_with_folded(text, pos, scheme)) {
      host_start = pos + scheme.size();
      break;
    }
  }
  const bool bare = !host_start;
  if (bare) {
    if (!starts_with_folded(text, pos, "www.")) return std::nullopt;
    host_start = pos + 4;
  }

  std::size_t run_end = *host_start;
  while (run_end < text.size() && is_host_char(at(text, run_end))) ++run_end;

  std::optional<std::size_t> host_end = longest_domain(text, *host_start);
  if (!bare) {
    const auto ip_end = longest_ipv4_literal(text, *host_start);
    if (ip_end && (!host_end || *ip_end > *host_end)) host_end = ip_end;
  }
  if (!host_end) return std::nullopt;

  std::size_t end = *host_end;
  if (end == run_end) {
    if (!bare && end + 1 < text.size() && at(text, end) == ':' &&
        is_ascii_digit(at(text, end + 1))) {
      end += 1 + digit_run(text, end + 1);
    }
    if (end < text.size() && at(text, end) == '/') {
      ++end;
      while (end < text.size() && is_path_char(at(text, end))) ++end;
    }
  }
  return make_span(pos, strip_closers(text, *host_end, end));
}

std::optional<Span> recognize_date(std::string_view text, std::size_t pos) {
  std::size_t i = pos;

  const std::size_t day_len = digit_run(text, i);
  if (day_len == 0 || day_len > 2) return std::nullopt;
  const unsigned day = digits_value(text, i, day_len);
  if (day < 1 || day > 31) return std::nullopt;
  i += day_len;

  if (i >= text.size()) return std::nullopt;
  const auto sep = at(text, i);
  if (sep != '/' && sep != '-' && sep != '.') return std::nullopt;
  ++i;

  const std::size_t month_len = digit_run(text, i);
  if (month_len == 0 || month_len > 2) return std::nullopt;
  const unsigned month = digits_value(text, i, month_len);
  if (month < 1 || month > 12) return std::nullopt;
  i += month_len;

  if (i >= text.size() || at(text, i) != sep) return std::nullopt;
  ++i;

  // The year takes the whole digit run, so a follower is never a digit.
  const std::size_t year_len = digit_run(text, i);
  if (year_len != 2 && year_len != 4) return std::nullopt;
  i += year_len;
  if (i < text.size() && is_ascii_alpha(at(text, i))) return std::nullopt;
  return Span(pos, i);
}

std::optional<Span> recognize(TokenKind kind, std::string_view text,
                              std::size_t pos) {
  switch (kind) {
    case TokenKind::Ip: return recognize_ip(text, pos);
    case TokenKind::Email: return recognize_email(text, pos);
    case TokenKind::Url: return recognize_url(text, pos);
    case TokenKind::Date: return recognize_date(text, pos);
    case TokenKind::Word: break;
  }
  return std::nullopt;
}

int kind_priority(TokenKind kind) {
  switch (kind) {
    case TokenKind::Url: return 4;
    case TokenKind::Email: return 3;
    case TokenKind::Ip: return 2;
    case TokenKind::Date: return 1;
    case TokenKind::Word: break;
  }
  return 0;
}

bool preferred(const Match& a, const Match& b) {
  if (a.span.size() != b.span.size()) return a.span.size() > b.span.size();
  return kind_priority(a.kind) > kind_priority(b.kind);
}

std::optional<Match> best_match(std::string_view text, std::size_t pos,
                                KindSet enabled) {
  if (pos >= text.size()) return std::nullopt;
  std::optional<Match> best;
  for (TokenKind kind : kSpecialKinds) {
    if (!enabled.contains(kind)) continue;
    if (auto span = recognize(kind, text, pos)) {
      Match m{kind, *span};
      if (!best || preferred(m, *best)) best = m;
    }
  }
  return best;
}

}  // namespace seqtok
