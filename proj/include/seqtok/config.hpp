// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// XML configuration. Schema:
//
//   <tokenizer-config>
//     <sequences>
//       <sequence type="ip|email|url|date" enabled="true|false"
//                 action="preserve|remove"/>
//     </sequences>
//     <options keep-punctuation="true|false" tag-output="true|false"
//              stats="true|false"/>
//     <output path="..."/>
//   </tokenizer-config>
//
// Every child and attribute is optional except sequence/@type and
// output/@path. Sequences left out default to enabled, preserve.

#ifndef SEQTOK_CONFIG_HPP_
#define SEQTOK_CONFIG_HPP_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqtok/model.hpp"

namespace seqtok {

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation, Io };

  ConfigError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  // 1-based line of the offending construct; 0 when unknown.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

// All kinds enabled with Preserve, no punctuation tokens, no tags, stats on,
// no output path.
Config default_config();

Config parse_config(std::string_view document);
Config load_config_file(const std::filesystem::path& path);

// Fully explicit document that parses back to `config`.
std::string serialize_config(const Config& config);

}  // namespace seqtok

#endif  // SEQTOK_CONFIG_HPP_
