// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Character classes over UTF-8 text.
//
// Special-sequence grammars are ASCII only. Word characters are ASCII
// alphanumerics plus non-ASCII scalar values that are letters or digits;
// the non-ASCII test is a table of punctuation, symbol and space blocks
// rather than a full Unicode database.

#ifndef SEQTOK_TEXT_HPP_
#define SEQTOK_TEXT_HPP_

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace seqtok::text {

inline constexpr bool is_ascii_digit(unsigned char c) { return c >= '0' && c <= '9'; }
inline constexpr bool is_ascii_alpha(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
inline constexpr bool is_ascii_alnum(unsigned char c) {
  return is_ascii_digit(c) || is_ascii_alpha(c);
}
inline constexpr bool is_ascii_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}
inline constexpr unsigned char ascii_lower(unsigned char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<unsigned char>(c - 'A' + 'a') : c;
}

// One decoded scalar value. `length` is the number of bytes consumed; an
// invalid or truncated sequence decodes as a single byte with valid = false.
struct Decoded {
  char32_t value = 0;
  std::size_t length = 1;
  bool valid = false;
};

Decoded decode_at(std::string_view s, std::size_t pos);

// Decodes the scalar that ends exactly at `end` (exclusive). Requires end > 0.
Decoded decode_before(std::string_view s, std::size_t end);

bool is_word_scalar(char32_t cp);
bool is_space_scalar(char32_t cp);

inline bool is_word(const Decoded& d) { return d.valid && is_word_scalar(d.value); }
inline bool is_space(const Decoded& d) { return d.valid && is_space_scalar(d.value); }

}  // namespace seqtok::text

#endif  // SEQTOK_TEXT_HPP_
