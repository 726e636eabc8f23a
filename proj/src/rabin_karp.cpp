// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/rabin_karp.hpp"

#include <algorithm>
#include <stdexcept>

#include "seqtok/text.hpp"

namespace seqtok::rk {

namespace {

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  // a, b < q <= 2^63 so the sum cannot overflow.
  const std::uint64_t s = a + b;
  return s >= q ? s - q : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t q) {
  return a >= b ? a - b : a + (q - b);
}

unsigned bucket_of(std::uint64_t hash) {
  return static_cast<unsigned>((hash * 0x9E3779B97F4A7C15u) >> 58);
}

void check_params(const FingerprintParams& params) {
  if (params.modulus < 2 || params.modulus > (std::uint64_t{1} << 63)) {
    throw std::invalid_argument("fingerprint modulus out of range");
  }
}

}  // namespace

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t q) {
  std::uint64_t result = 1 % q;
  base %= q;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, q);
    base = mul_mod(base, base, q);
    exp >>= 1;
  }
  return result;
}

std::uint64_t fingerprint(std::string_view bytes,
                          const FingerprintParams& params) {
  if (bytes.empty()) throw std::invalid_argument("cannot fingerprint empty input");
  check_params(params);
  const std::uint64_t q = params.modulus;
  const std::uint64_t b = params.base % q;
  std::uint64_t h = 0;
  for (unsigned char c : bytes) h = add_mod(mul_mod(h, b, q), c % q, q);
  return h;
}

std::uint64_t roll(std::uint64_t prev_hash, unsigned char outgoing,
                   unsigned char incoming, const FingerprintParams& params,
                   std::size_t window_len) {
  const std::uint64_t q = params.modulus;
  const std::uint64_t high = pow_mod(params.base, window_len - 1, q);
  const std::uint64_t drop = mul_mod(outgoing % q, high, q);
  const std::uint64_t shifted =
      mul_mod(sub_mod(prev_hash % q, drop, q), params.base % q, q);
  return add_mod(shifted, incoming % q, q);
}

RollingWindow::RollingWindow(std::size_t window_len,
                             const FingerprintParams& params)
    : length_(window_len), params_(params), out_term_(256), in_term_(256) {
  if (window_len == 0) throw std::invalid_argument("window length must be > 0");
  check_params(params);
  const std::uint64_t q = params.modulus;
  base_mod_ = params.base % q;
  byte_mersenne_ = q == kMersenne61 && params.base == 256;
  const std::uint64_t high = pow_mod(params.base, window_len - 1, q);
  for (unsigned v = 0; v < 256; ++v) {
    out_term_[v] = mul_mod(v % q, high, q);
    in_term_[v] = v % q;
  }
  if (byte_mersenne_) {
    neg_out_term_.resize(256);
    for (unsigned v = 0; v < 256; ++v) neg_out_term_[v] = 4 * q - out_term_[v];
  }
}

std::vector<std::size_t> find_all(std::string_view pattern,
                                  std::string_view text,
                                  const FingerprintParams& params,
                                  ReadCounter* counter) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be non-empty");
  std::vector<std::size_t> out;
  const std::size_t m = pattern.size();
  if (m > text.size()) return out;

  const RollingWindow window(m, params);
  const std::uint64_t target = fingerprint(pattern, params);
  std::uint64_t h = fingerprint(text.substr(0, m), params);
  if (counter) counter->rolling_reads += m;

  for (std::size_t i = 0;; ++i) {
    if (h == target) {
      if (counter) counter->verify_reads += m;
      if (text.compare(i, m, pattern) == 0) out.push_back(i);
    }
    if (i + m >= text.size()) break;
    if (counter) counter->rolling_reads += 2;
    h = window.roll(h, static_cast<unsigned char>(text[i]),
                    static_cast<unsigned char>(text[i + m]));
  }
  return out;
}

MultiPatternMatcher::MultiPatternMatcher(std::vector<Pattern> patterns,
                                         CaseMode mode,
                                         FingerprintParams params)
    : mode_(mode), params_(params) {
  for (unsigned v = 0; v < 256; ++v) {
    const auto c = static_cast<unsigned char>(v);
    byte_map_[v] = mode_ == CaseMode::AsciiFold ? text::ascii_lower(c) : c;
  }
  std::size_t order = 0;
  for (auto& p : patterns) {
    if (p.literal.empty()) throw std::invalid_argument("empty pattern literal");
    std::string lit = std::move(p.literal);
    for (char& c : lit) c = static_cast<char>(byte_map_[static_cast<unsigned char>(c)]);
    auto it = std::find_if(groups_.begin(), groups_.end(), [&](const Group& g) {
      return g.window.length() == lit.size();
    });
    if (it == groups_.end()) {
      groups_.push_back(Group{RollingWindow(lit.size(), params_), {}});
      it = std::prev(groups_.end());
    }
    const std::uint64_t h = fingerprint(lit, params_);
    it->entries.push_back(Entry{std::move(lit), p.tag, order++, h});
  }
  std::sort(groups_.begin(), groups_.end(), [](const Group& a, const Group& b) {
    return a.window.length() < b.window.length();
  });
}

std::vector<MultiPatternMatcher::Hit> MultiPatternMatcher::scan(
    std::string_view text, const std::function<bool(int)>& accept_tag,
    ReadCounter* counter) const {
  struct Ordered {
    std::size_t offset;
    std::size_t order;
    int tag;
  };
  std::vector<Ordered> found;
  std::vector<std::size_t> run_starts;
  std::vector<const Entry*> live;
  const std::uint64_t q = params_.modulus;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();

  // One rolling pass per distinct literal length.
  for (const Group& group : groups_) {
    live.clear();
    // One bit per live fingerprint, indexed by a multiplicative mix of the
    // hash; a clear bit skips the per-entry comparison.
    std::uint64_t buckets = 0;
    for (const Entry& e : group.entries) {
      if (accept_tag && !accept_tag(e.tag)) continue;
      live.push_back(&e);
      buckets |= std::uint64_t{1} << bucket_of(e.hash);
    }
    const RollingWindow& window = group.window;
    const std::size_t m = window.length();
    if (live.empty() || m > n) continue;
    run_starts.push_back(found.size());

    auto check = [&](std::size_t i, std::uint64_t h) {
      if (!((buckets >> bucket_of(h)) & 1)) return;
      for (const Entry* e : live) {
        if (e->hash != h) continue;
        if (counter) counter->verify_reads += m;
        bool equal = true;
        for (std::size_t k = 0; k < m && equal; ++k) {
          equal = byte_map_[bytes[i + k]] == static_cast<unsigned char>(e->literal[k]);
        }
        if (equal) found.push_back({i, e->order, e->tag});
      }
    };

    if (counter) {
      counter->rolling_reads += m == 1 ? n : m + 2 * (n - m);
    }
    if (m == 1) {
      for (std::size_t i = 0; i < n; ++i) check(i, window.byte_term(byte_map_[bytes[i]]));
      continue;
    }
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < m; ++k) {
      h = add_mod(mul_mod(h, params_.base % q, q), byte_map_[bytes[k]] % q, q);
    }
    if (window.lazy_capable()) {
      // Redundant representation below 2^62; canonical form only for checks.
      for (std::size_t i = 0;; ++i) {
        check(i, RollingWindow::canonical(h));
        if (i + m >= n) break;
        h = window.roll_lazy(h, byte_map_[bytes[i]], byte_map_[bytes[i + m]]);
      }
    } else {
      for (std::size_t i = 0;; ++i) {
        check(i, h);
        if (i + m >= n) break;
        h = window.roll(h, byte_map_[bytes[i]], byte_map_[bytes[i + m]]);
      }
    }
  }

  // Each pass produced a run ordered by offset, then registration order.
  auto before = [](const Ordered& a, const Ordered& b) {
    return a.offset != b.offset ? a.offset < b.offset : a.order < b.order;
  };
  for (std::size_t r = 1; r < run_starts.size(); ++r) {
    const std::size_t end = r + 1 < run_starts.size() ? run_starts[r + 1] : found.size();
    std::inplace_merge(found.begin(), found.begin() + run_starts[r], found.begin() + end,
                       before);
  }
  std::vector<Hit> hits;
  hits.reserve(found.size());
  for (const auto& f : found) hits.push_back({f.offset, f.tag});
  return hits;
}

}  // namespace seqtok::rk
