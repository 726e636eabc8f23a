// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Karp-Rabin fingerprint matching.
//
// A window w of m bytes is represented by its fingerprint
//
//   fp(w) = ( w[0]*b^(m-1) + w[1]*b^(m-2) + ... + w[m-1] ) mod q
//
// which can be shifted one byte to the right in constant time. Parameters
// are deterministic (b = 256, q = 2^61 - 1) so runs are reproducible; every
// fingerprint hit is confirmed by a byte comparison before it is reported.

#ifndef SEQTOK_RABIN_KARP_HPP_
#define SEQTOK_RABIN_KARP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace seqtok::rk {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

struct FingerprintParams {
  std::uint64_t base = 256;
  std::uint64_t modulus = kMersenne61;
};

// a * b mod q for a, b < q <= 2^63.
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  __extension__ using u128 = unsigned __int128;
  const u128 p = static_cast<u128>(a) * b;
  if (q == kMersenne61) {
    std::uint64_t r = static_cast<std::uint64_t>(p & kMersenne61) +
                      static_cast<std::uint64_t>(p >> 61);
    r = (r & kMersenne61) + (r >> 61);
    return r >= kMersenne61 ? r - kMersenne61 : r;
  }
  return static_cast<std::uint64_t>(p % q);
}
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q);

// Throws std::invalid_argument on empty input.
std::uint64_t fingerprint(std::string_view bytes,
                          const FingerprintParams& params = {});

// Shifts a window fingerprint one byte: drops `outgoing`, appends `incoming`.
std::uint64_t roll(std::uint64_t prev_hash, unsigned char outgoing,
                   unsigned char incoming, const FingerprintParams& params,
                   std::size_t window_len);

// Rolling state for one window length with b^(m-1) precomputed.
class RollingWindow {
 public:
  RollingWindow(std::size_t window_len, const FingerprintParams& params);

  std::size_t length() const { return length_; }
  std::uint64_t roll(std::uint64_t prev_hash, unsigned char outgoing,
                     unsigned char incoming) const {
    // The tables keep divisions out of the per-byte path.
    const std::uint64_t q = params_.modulus;
    const std::uint64_t out = out_term_[outgoing];
    const std::uint64_t diff = prev_hash >= out ? prev_hash - out : prev_hash + (q - out);
    std::uint64_t shifted;
    if (byte_mersenne_) {
      // b = 256 and q = 2^61 - 1: the high bits wrap around since 2^61 = 1.
      shifted = ((diff << 8) & kMersenne61) + (diff >> 53);
      if (shifted >= q) shifted -= q;
    } else {
      shifted = mul_mod(diff, base_mod_, q);
    }
    const std::uint64_t s = shifted + in_term_[incoming];
    return s >= q ? s - q : s;
  }
  // Fingerprint of the single byte `v`; equals roll() when length() is 1.
  std::uint64_t byte_term(unsigned char v) const { return in_term_[v]; }

  // Only for b = 256 and q = 2^61 - 1 (see lazy_capable()). Same recurrence
  // as roll() with the reductions deferred: takes and returns a value below
  // 2^62 that is congruent to the fingerprint. canonical() maps it back.
  bool lazy_capable() const { return byte_mersenne_; }
  std::uint64_t roll_lazy(std::uint64_t h, unsigned char outgoing, unsigned char incoming) const {
    // h < 2^62 and the negated term is at most 4q < 2^63, so d fits.
    const std::uint64_t d = h + neg_out_term_[outgoing];
    return ((d << 8) & kMersenne61) + (d >> 53) + incoming;
  }
  static std::uint64_t canonical(std::uint64_t h) {
    const std::uint64_t r = (h & kMersenne61) + (h >> 61);
    return r >= kMersenne61 ? r - kMersenne61 : r;
  }

 private:
  std::size_t length_;
  FingerprintParams params_;
  std::uint64_t base_mod_;
  bool byte_mersenne_ = false;  // b = 256 and q = 2^61 - 1
  // outgoing byte contribution: byte * b^(m-1) mod q, for every byte value.
  std::vector<std::uint64_t> out_term_;
  // incoming byte contribution: byte mod q.
  std::vector<std::uint64_t> in_term_;
  // 4q - out_term_, only filled when byte_mersenne_.
  std::vector<std::uint64_t> neg_out_term_;
};

// Counts bytes the scanners read from the text, excluding verification.
struct ReadCounter {
  std::size_t rolling_reads = 0;
  std::size_t verify_reads = 0;
};

// Every offset where `pattern` occurs in `text`, ascending, overlaps
// included. Throws std::invalid_argument on an empty pattern.
std::vector<std::size_t> find_all(std::string_view pattern,
                                  std::string_view text,
                                  const FingerprintParams& params = {},
                                  ReadCounter* counter = nullptr);

enum class CaseMode { Exact, AsciiFold };

// Multi-pattern matcher: patterns are grouped by length and each group is
// found with one rolling pass. Immutable after construction.
class MultiPatternMatcher {
 public:
  struct Pattern {
    std::string literal;
    int tag = 0;
  };

  struct Hit {
    std::size_t offset;
    int tag;

    bool operator==(const Hit&) const = default;
  };

  // Throws std::invalid_argument on an empty literal.
  explicit MultiPatternMatcher(std::vector<Pattern> patterns,
                               CaseMode mode = CaseMode::Exact,
                               FingerprintParams params = {});

  // Hits ordered by offset, then by pattern registration order. Patterns
  // whose tag is rejected by `accept_tag` are skipped.
  std::vector<Hit> scan(std::string_view text,
                        const std::function<bool(int)>& accept_tag = {},
                        ReadCounter* counter = nullptr) const;

  // One rolling window per distinct literal length.
  std::size_t group_count() const { return groups_.size(); }

 private:
  struct Entry {
    std::string literal;  // folded when mode is AsciiFold
    int tag;
    std::size_t order;
    std::uint64_t hash;
  };
  struct Group {
    RollingWindow window;
    std::vector<Entry> entries;
  };

  unsigned char load(std::string_view text, std::size_t i) const {
    return byte_map_[static_cast<unsigned char>(text[i])];
  }

  CaseMode mode_;
  std::array<unsigned char, 256> byte_map_;  // identity, or ASCII lowercase
  FingerprintParams params_;
  std::vector<Group> groups_;
};

}  // namespace seqtok::rk

#endif  // SEQTOK_RABIN_KARP_HPP_
