// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/text.hpp"

namespace seqtok::text {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

struct Range {
  char32_t lo;
  char32_t hi;
};

// Non-ASCII scalar ranges that are neither letters nor digits.
constexpr Range kNonWordRanges[] = {
    {0x0080, 0x00A9},   {0x00AB, 0x00B4},   {0x00B6, 0x00B9},
    {0x00BB, 0x00BF},   {0x00D7, 0x00D7},   {0x00F7, 0x00F7},
    {0x037E, 0x037E},   {0x0387, 0x0387},   {0x055A, 0x055F},
    {0x0589, 0x058A},   {0x05BE, 0x05BE},   {0x05C0, 0x05C0},
    {0x05C3, 0x05C3},   {0x05F3, 0x05F4},   {0x060C, 0x060D},
    {0x061B, 0x061F},   {0x066A, 0x066D},   {0x06D4, 0x06D4},
    {0x0964, 0x0965},   {0x0E4F, 0x0E4F},   {0x0E5A, 0x0E5B},
    {0x1680, 0x1680},   {0x2000, 0x206F},   {0x20A0, 0x20CF},
    {0x2190, 0x2BFF},   {0x2E00, 0x2E7F},   {0x3000, 0x3004},
    {0x3008, 0x3020},   {0x3030, 0x3030},   {0xD800, 0xDFFF},
    {0xE000, 0xF8FF},   {0xFD3E, 0xFD3F},   {0xFE10, 0xFE1F},
    {0xFE30, 0xFE6F},   {0xFEFF, 0xFEFF},   {0xFF01, 0xFF0F},
    {0xFF1A, 0xFF20},   {0xFF3B, 0xFF40},   {0xFF5B, 0xFF65},
    {0xFFE0, 0xFFFF},   {0x1F000, 0x1FAFF}, {0xE0000, 0x10FFFF},
};

}  // namespace

Decoded decode_at(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1, true};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return {b0, 1, false};
  }
  if (pos + len > s.size()) return {b0, 1, false};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if (!is_continuation(b)) return {b0, 1, false};
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {b0, 1, false};
  }
  return {cp, len, true};
}

Decoded decode_before(std::string_view s, std::size_t end) {
  std::size_t start = end - 1;
  while (start > 0 && end - start < 4 &&
         is_continuation(static_cast<unsigned char>(s[start]))) {
    --start;
  }
  Decoded d = decode_at(s, start);
  if (d.valid && start + d.length == end) return d;
  return {static_cast<unsigned char>(s[end - 1]), 1, false};
}

bool is_space_scalar(char32_t cp) {
  if (cp < 0x80) return is_ascii_space(static_cast<unsigned char>(cp));
  switch (cp) {
    case 0x0085: case 0x00A0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool is_word_scalar(char32_t cp) {
  if (cp < 0x80) return is_ascii_alnum(static_cast<unsigned char>(cp));
  for (const Range& r : kNonWordRanges) {
    if (cp < r.lo) return true;
    if (cp <= r.hi) return false;
  }
  return true;
}

}  // namespace seqtok::text
