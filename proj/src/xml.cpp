// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/xml.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace seqtok::xml {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class Parser {
 public:
  explicit Parser(std::string_view doc) : doc_(doc) {}

  Element parse_document() {
    if (doc_.substr(0, 3) == "\xEF\xBB\xBF") pos_ = 3;
    if (looking_at("<?xml") && pos_ + 5 < doc_.size() && is_space(doc_[pos_ + 5])) {
      skip_past("?>", "unterminated XML declaration");
    }
    skip_misc();
    if (eof()) fail("missing root element");
    Element root = parse_element();
    skip_misc();
    if (!eof()) fail("unexpected content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& what) const {
    const std::size_t line =
        1 + static_cast<std::size_t>(std::count(
                doc_.begin(), doc_.begin() + std::min(offset, doc_.size()), '\n'));
    throw ParseError(line, "line " + std::to_string(line) + ": " + what);
  }

  std::size_t line_at(std::size_t offset) const {
    return 1 + static_cast<std::size_t>(
                   std::count(doc_.begin(), doc_.begin() + offset, '\n'));
  }

  bool eof() const { return pos_ >= doc_.size(); }
  bool looking_at(std::string_view s) const { return doc_.substr(pos_, s.size()) == s; }

  void skip_space() {
    while (!eof() && is_space(doc_[pos_])) ++pos_;
  }

  void skip_past(std::string_view terminator, const char* error) {
    const auto end = doc_.find(terminator, pos_);
    if (end == std::string_view::npos) fail(error);
    pos_ = end + terminator.size();
  }

  void reject_markup_declarations() {
    if (looking_at("<!DOCTYPE")) fail("DOCTYPE declarations are not supported");
    if (looking_at("<![CDATA[")) fail("CDATA sections are not supported");
    if (looking_at("<!")) fail("unsupported markup declaration");
    if (looking_at("<?")) fail("processing instructions are not supported");
  }

  void skip_comment() {
    pos_ += 4;
    const auto end = doc_.find("--", pos_);
    if (end == std::string_view::npos) fail("unterminated comment");
    if (doc_.substr(end, 3) != "-->") fail_at(end, "'--' is not allowed inside a comment");
    pos_ = end + 3;
  }

  // Whitespace and comments between elements.
  void skip_misc() {
    while (true) {
      skip_space();
      if (looking_at("<!--")) {
        skip_comment();
        continue;
      }
      if (!eof() && doc_[pos_] == '<') reject_markup_declarations();
      return;
    }
  }

  std::string parse_name(const char* what) {
    if (eof() || !is_name_start(doc_[pos_])) fail(std::string("expected ") + what);
    const std::size_t start = pos_;
    while (!eof() && (is_name_char(doc_[pos_]) || doc_[pos_] == ':')) {
      if (doc_[pos_] == ':') fail("namespaces are not supported");
      ++pos_;
    }
    return std::string(doc_.substr(start, pos_ - start));
  }

  void parse_reference(std::string& out) {
    const std::size_t start = pos_;
    const auto semi = doc_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) fail("malformed entity reference");
    const std::string_view ref = doc_.substr(pos_ + 1, semi - pos_ - 1);
    pos_ = semi + 1;
    if (ref == "lt") return out.push_back('<');
    if (ref == "gt") return out.push_back('>');
    if (ref == "amp") return out.push_back('&');
    if (ref == "quot") return out.push_back('"');
    if (ref == "apos") return out.push_back('\'');
    if (ref.size() >= 2 && ref[0] == '#') {
      const bool hex = ref[1] == 'x';
      const std::string_view digits = ref.substr(hex ? 2 : 1);
      std::uint32_t cp = 0;
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                             cp, hex ? 16 : 10);
      if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
          cp == 0 || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        fail_at(start, "invalid character reference");
      }
      return append_utf8(out, cp);
    }
    fail_at(start, "undefined entity '&" + std::string(ref) + ";'");
  }

  std::string parse_attribute_value() {
    if (eof() || (doc_[pos_] != '"' && doc_[pos_] != '\'')) fail("expected quoted attribute value");
    const char quote = doc_[pos_++];
    std::string value;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      const char c = doc_[pos_];
      if (c == quote) {
        ++pos_;
        return value;
      }
      if (c == '<') fail("'<' is not allowed in attribute values");
      if (c == '&') {
        parse_reference(value);
        continue;
      }
      value.push_back(c);
      ++pos_;
    }
  }

  Element parse_element() {
    if (eof() || doc_[pos_] != '<') fail("expected element");
    Element el;
    el.line = line_at(pos_);
    ++pos_;
    el.name = parse_name("element name");

    while (true) {
      const bool had_space = !eof() && is_space(doc_[pos_]);
      skip_space();
      if (eof()) fail("unterminated start tag <" + el.name + ">");
      if (looking_at("/>")) {
        pos_ += 2;
        return el;
      }
      if (doc_[pos_] == '>') {
        ++pos_;
        break;
      }
      if (!had_space) fail("expected whitespace before attribute");
      Attribute attr;
      attr.line = line_at(pos_);
      attr.name = parse_name("attribute name");
      if (attr.name == "xmlns") fail("namespaces are not supported");
      skip_space();
      if (eof() || doc_[pos_] != '=') fail("expected '=' after attribute '" + attr.name + "'");
      ++pos_;
      skip_space();
      attr.value = parse_attribute_value();
      if (el.find_attribute(attr.name)) {
        fail("duplicate attribute '" + attr.name + "' on <" + el.name + ">");
      }
      el.attributes.push_back(std::move(attr));
    }

    while (true) {
      skip_misc();
      if (eof()) fail("missing end tag </" + el.name + ">");
      if (looking_at("</")) {
        pos_ += 2;
        const std::size_t name_pos = pos_;
        const std::string closing = parse_name("end tag name");
        if (closing != el.name) {
          fail_at(name_pos, "mismatched end tag </" + closing + ">, expected </" + el.name + ">");
        }
        skip_space();
        if (eof() || doc_[pos_] != '>') fail("expected '>'");
        ++pos_;
        return el;
      }
      if (doc_[pos_] != '<') fail("unexpected text content in <" + el.name + ">");
      el.children.push_back(parse_element());
    }
  }

  std::string_view doc_;
  std::size_t pos_ = 0;
};

}  // namespace

const Attribute* Element::find_attribute(std::string_view attr) const {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

Element parse(std::string_view document) { return Parser(document).parse_document(); }

std::string escape_attribute(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace seqtok::xml
