// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracle/reference.hpp"

#include <algorithm>

#include "seqtok/text.hpp"

namespace seqtok::oracle {

namespace {

bool digit(char c) { return c >= '0' && c <= '9'; }
bool alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool alnum(char c) { return digit(c) || alpha(c); }
bool all_of(std::string_view s, bool (*pred)(char)) {
  return std::all_of(s.begin(), s.end(), pred);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto p = s.find(sep, start);
    if (p == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

unsigned value_of(std::string_view digits) {
  unsigned v = 0;
  for (char c : digits) v = v * 10 + static_cast<unsigned>(c - '0');
  return v;
}

bool iequals_prefix(std::string_view s, std::string_view lower) {
  if (s.size() < lower.size()) return false;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    char c = s[i];
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    if (c != lower[i]) return false;
  }
  return true;
}

bool local_char(char c) {
  return alnum(c) || c == '.' || c == '_' || c == '%' || c == '+' || c == '-';
}

bool label_char(char c) { return alnum(c) || c == '-'; }

bool path_char(char c) {
  return alnum(c) || std::string_view("._~!$&'()*+,;=:@%/?#-").find(c) !=
                         std::string_view::npos;
}

// No production admits ASCII whitespace, so lengths past the next space
// cannot match and are not enumerated.
std::size_t longest_candidate(std::string_view text, std::size_t pos) {
  std::size_t e = pos;
  while (e < text.size() && !text::is_ascii_space(static_cast<unsigned char>(text[e]))) ++e;
  return e - pos;
}

bool closer(char c) { return std::string_view(".,;:!?)").find(c) != std::string_view::npos; }

std::string_view strip(std::string_view s) {
  while (!s.empty() && closer(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_path(std::string_view p) {
  return !p.empty() && p[0] == '/' && all_of(p, path_char);
}

}  // namespace

bool valid_ipv4(std::string_view s) {
  const auto parts = split(s, '.');
  if (parts.size() != 4) return false;
  for (auto p : parts) {
    if (p.empty() || p.size() > 3 || !all_of(p, digit) || value_of(p) > 255) return false;
  }
  return true;
}

bool valid_domain(std::string_view s) {
  const auto labels = split(s, '.');
  if (labels.size() < 2) return false;
  for (auto l : labels) {
    if (l.empty() || l.size() > 63 || !all_of(l, label_char) || l.front() == '-' ||
        l.back() == '-') {
      return false;
    }
  }
  const auto last = labels.back();
  return last.size() >= 2 && all_of(last, alpha);
}

bool valid_email(std::string_view s) {
  const auto parts = split(s, '@');
  if (parts.size() != 2) return false;
  const auto local = parts[0];
  if (local.empty() || local.size() > 64 || !all_of(local, local_char)) return false;
  if (local.front() == '.' || local.back() == '.') return false;
  if (local.find("..") != std::string_view::npos) return false;
  return valid_domain(parts[1]);
}

bool valid_url(std::string_view s) {
  for (std::string_view scheme : {"http://", "https://", "ftp://"}) {
    if (!iequals_prefix(s, scheme)) continue;
    const std::string_view rest(s.data() + scheme.size(), s.size() - scheme.size());
    const auto slash = rest.find('/');
    const auto authority = rest.substr(0, slash);
    if (slash != std::string_view::npos && !valid_path(rest.substr(slash))) return false;
    const auto colon = authority.find(':');
    const auto host = authority.substr(0, colon);
    if (colon != std::string_view::npos) {
      const auto port = authority.substr(colon + 1);
      if (port.empty() || !all_of(port, digit)) return false;
    }
    return valid_domain(host) || valid_ipv4(host);
  }
  if (iequals_prefix(s, "www.")) {
    const auto rest = s.substr(4);
    const auto slash = rest.find('/');
    if (slash != std::string_view::npos && !valid_path(rest.substr(slash))) return false;
    return valid_domain(rest.substr(0, slash));
  }
  return false;
}

bool valid_date(std::string_view s) {
  for (char sep : {'/', '-', '.'}) {
    const auto parts = split(s, sep);
    if (parts.size() != 3) continue;
    const auto d = parts[0], m = parts[1], y = parts[2];
    if (!all_of(d, digit) || !all_of(m, digit) || !all_of(y, digit)) continue;
    if (d.empty() || d.size() > 2 || m.empty() || m.size() > 2) continue;
    if (y.size() != 2 && y.size() != 4) continue;
    const unsigned dv = value_of(d), mv = value_of(m);
    if (dv >= 1 && dv <= 31 && mv >= 1 && mv <= 12) return true;
  }
  return false;
}

bool boundary(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  const char prev = text[pos - 1];
  if (static_cast<unsigned char>(prev) < 0x80) {
    return !(alnum(prev) || std::string_view(".@-_%+").find(prev) != std::string_view::npos);
  }
  return !text::is_word(text::decode_before(text, pos));
}

std::optional<std::size_t> ip(std::string_view text, std::size_t pos) {
  for (std::size_t len = longest_candidate(text, pos); len >= 1; --len) {
    if (!valid_ipv4(text.substr(pos, len))) continue;
    const std::size_t e = pos + len;
    if (e < text.size()) {
      if (alnum(text[e])) continue;
      if (text[e] == '.' && e + 1 < text.size() && digit(text[e + 1])) continue;
    }
    return len;
  }
  return std::nullopt;
}

std::optional<std::size_t> email(std::string_view text, std::size_t pos) {
  for (std::size_t len = longest_candidate(text, pos); len >= 1; --len) {
    const auto c = strip(text.substr(pos, len));
    if (!c.empty() && valid_email(c)) return c.size();
  }
  return std::nullopt;
}

std::optional<std::size_t> url(std::string_view text, std::size_t pos) {
  for (std::size_t len = longest_candidate(text, pos); len >= 1; --len) {
    const auto c = strip(text.substr(pos, len));
    if (!c.empty() && valid_url(c)) return c.size();
  }
  return std::nullopt;
}

std::optional<std::size_t> date(std::string_view text, std::size_t pos) {
  for (std::size_t len = longest_candidate(text, pos); len >= 1; --len) {
    if (!valid_date(text.substr(pos, len))) continue;
    const std::size_t e = pos + len;
    if (e < text.size() && alnum(text[e])) continue;
    return len;
  }
  return std::nullopt;
}

std::optional<std::size_t> recognize(TokenKind kind, std::string_view text,
                                     std::size_t pos) {
  if (pos >= text.size()) return std::nullopt;
  switch (kind) {
    case TokenKind::Ip: return ip(text, pos);
    case TokenKind::Email: return email(text, pos);
    case TokenKind::Url: return url(text, pos);
    case TokenKind::Date: return date(text, pos);
    default: return std::nullopt;
  }
}

std::vector<RefMatch> scan(std::string_view text, KindSet enabled) {
  // Priority order for equal lengths.
  constexpr TokenKind order[] = {TokenKind::Url, TokenKind::Email, TokenKind::Ip,
                                 TokenKind::Date};
  std::vector<RefMatch> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::optional<RefMatch> best;
    if (boundary(text, pos)) {
      for (TokenKind k : order) {
        if (!enabled.contains(k)) continue;
        if (auto len = recognize(k, text, pos)) {
          if (!best || *len > best->end - best->start) best = RefMatch{k, pos, pos + *len};
        }
      }
    }
    if (best) {
      out.push_back(*best);
      pos = best->end;
    } else {
      ++pos;
    }
  }
  return out;
}

std::vector<RefToken> tokenize(std::string_view text, const Config& config) {
  std::vector<RefToken> out;
  auto words = [&](std::string_view gap) {
    // 0 = word, 1 = space, 2 = other
    std::string run;
    int run_class = -1;
    auto flush = [&] {
      if (!run.empty() && (run_class == 0 || (run_class == 2 && config.keep_punctuation))) {
        out.push_back({TokenKind::Word, run});
      }
      run.clear();
    };
    std::size_t i = 0;
    while (i < gap.size()) {
      const auto d = text::decode_at(gap, i);
      const int cls = text::is_word(d) ? 0 : text::is_space(d) ? 1 : 2;
      if (cls != run_class) {
        flush();
        run_class = cls;
      }
      run.append(gap.substr(i, d.length));
      i += d.length;
    }
    flush();
  };
  std::size_t cursor = 0;
  for (const auto& m : scan(text, config.enabled_kinds())) {
    words(text.substr(cursor, m.start - cursor));
    if (config.rule(m.kind).action == Action::Preserve) {
      out.push_back({m.kind, std::string(text.substr(m.start, m.end - m.start))});
    }
    cursor = m.end;
  }
  words(text.substr(cursor));
  return out;
}

std::vector<std::size_t> naive_find_all(std::string_view pattern, std::string_view text) {
  std::vector<std::size_t> out;
  if (pattern.size() > text.size()) return out;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    bool eq = true;
    for (std::size_t k = 0; k < pattern.size() && eq; ++k) eq = text[i + k] == pattern[k];
    if (eq) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<TokenKind, std::size_t>> naive_anchors(std::string_view text,
                                                             KindSet enabled) {
  const std::vector<std::pair<TokenKind, std::vector<std::string_view>>> table = {
      {TokenKind::Ip, {"."}},
      {TokenKind::Email, {"@"}},
      {TokenKind::Url, {"http://", "https://", "ftp://", "www."}},
      {TokenKind::Date, {"/", "-", "."}},
  };
  std::vector<std::pair<TokenKind, std::size_t>> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    for (const auto& [kind, literals] : table) {
      if (!enabled.contains(kind)) continue;
      for (auto lit : literals) {
        if (iequals_prefix(text.substr(i), lit)) {
          out.emplace_back(kind, i);
          break;
        }
      }
    }
  }
  return out;
}

std::map<std::string, std::size_t> frequency_map(const std::vector<std::string>& terms) {
  std::map<std::string, std::size_t> m;
  for (const auto& t : terms) ++m[t];
  return m;
}

}  // namespace seqtok::oracle
