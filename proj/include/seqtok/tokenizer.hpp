// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Scanning engine: finds special sequences, splits the rest into words and
// renders token or filtered-text output.

#ifndef SEQTOK_TOKENIZER_HPP_
#define SEQTOK_TOKENIZER_HPP_

#include <cstddef>
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqtok/model.hpp"
#include "seqtok/recognizers.hpp"

namespace seqtok {

// Direct consults best_match at every start boundary. Anchored locates
// anchor literals first and only runs recognizers around them. Both produce
// identical results.
enum class ScanStrategy { Direct, Anchored };

std::string_view strategy_name(ScanStrategy strategy);
std::optional<ScanStrategy> strategy_from_name(std::string_view name);

// Upper bound on how far an anchor is walked back to find a match start.
inline constexpr std::size_t kMaxAnchorWalk = 512;

// Non-overlapping special matches in ascending order. Resolution is
// leftmost first, then longest, then Url > Email > Ip > Date.
std::vector<Match> scan_special(std::string_view text, KindSet enabled,
                                ScanStrategy strategy = ScanStrategy::Anchored);

// Preserve-action matches become tokens of their kind, Remove-action matches
// are dropped, and the remaining text is split into Word tokens.
std::vector<Token> tokenize(std::string_view text, const Config& config,
                            ScanStrategy strategy = ScanStrategy::Anchored);

// Tokenizes line by line, reporting tokens with document offsets. Matches
// never span a line break, so the token stream equals tokenize() on the
// whole document.
void tokenize_stream(std::istream& in, const Config& config,
                     ScanStrategy strategy,
                     const std::function<void(const Token&)>& sink);

// Text with every Remove-action match excised. Whitespace around each
// excision is normalized to one space, or a space is inserted when neither
// side has any; at the start or end of the text the neighbouring whitespace
// is dropped. Excision repeats until no Remove-action match is left.
std::string filter_text(std::string_view text, const Config& config,
                        ScanStrategy strategy = ScanStrategy::Anchored);

// One token per line. With tag_output, special tokens get a "<IP> ",
// "<EMAIL> ", "<URL> " or "<DATE> " prefix.
std::string render_tokens(std::span<const Token> tokens, bool tag_output);
void append_rendered(std::string& out, const Token& token, bool tag_output);

}  // namespace seqtok

#endif  // SEQTOK_TOKENIZER_HPP_
