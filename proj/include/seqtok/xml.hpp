// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

// Minimal XML reader for configuration files: elements, attributes and
// comments. DOCTYPE, CDATA, processing instructions (other than the XML
// declaration), namespaces, character data and non-predefined entities are
// rejected.

#ifndef SEQTOK_XML_HPP_
#define SEQTOK_XML_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqtok::xml {

struct Attribute {
  std::string name;
  std::string value;
  std::size_t line = 0;
};

struct Element {
  std::string name;
  std::size_t line = 0;
  std::vector<Attribute> attributes;
  std::vector<Element> children;

  const Attribute* find_attribute(std::string_view attr) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

Element parse(std::string_view document);

// Escapes & < > " ' for use inside a double-quoted attribute value.
std::string escape_attribute(std::string_view value);

}  // namespace seqtok::xml

#endif  // SEQTOK_XML_HPP_
