// Copyright 2026 The seqtok Authors
// SPDX-License-Identifier: Apache-2.0

#include "seqtok/config.hpp"

#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>

#include "seqtok/xml.hpp"

namespace seqtok {

namespace {

[[noreturn]] void invalid(std::size_t line, const std::string& what) {
  throw ConfigError(ConfigError::Kind::Validation, line,
                    "line " + std::to_string(line) + ": " + what);
}

void check_attributes(const xml::Element& el,
                      std::initializer_list<std::string_view> allowed) {
  for (const auto& a : el.attributes) {
    bool ok = false;
    for (auto name : allowed) ok = ok || a.name == name;
    if (!ok) invalid(a.line, "unknown attribute '" + a.name + "' on <" + el.name + ">");
  }
}

void check_no_children(const xml::Element& el) {
  if (!el.children.empty()) {
    invalid(el.children.front().line, "<" + el.name + "> takes no child elements");
  }
}

bool parse_bool(const xml::Attribute& a) {
  if (a.value == "true") return true;
  if (a.value == "false") return false;
  invalid(a.line, "attribute '" + a.name + "' must be true or false, got '" + a.value + "'");
}

void read_bool(const xml::Element& el, std::string_view name, bool& target) {
  if (const auto* a = el.find_attribute(name)) target = parse_bool(*a);
}

void read_sequences(const xml::Element& el, Config& config) {
  check_attributes(el, {});
  std::array<bool, 4> seen{};
  for (const auto& child : el.children) {
    if (child.name != "sequence") {
      invalid(child.line, "unknown element <" + child.name + "> in <sequences>");
    }
    check_attributes(child, {"type", "enabled", "action"});
    check_no_children(child);

    const auto* type = child.find_attribute("type");
    if (!type) invalid(child.line, "<sequence> requires a type attribute");
    const auto kind = kind_from_name(type->value);
    if (!kind || *kind == TokenKind::Word) {
      invalid(type->line, "unknown sequence type '" + type->value + "'");
    }
    auto& was_seen = seen[special_index(*kind)];
    if (was_seen) {
      invalid(child.line, "duplicate sequence element for type '" + type->value + "'");
    }
    was_seen = true;

    SequenceRule& rule = config.rule(*kind);
    read_bool(child, "enabled", rule.enabled);
    if (const auto* action = child.find_attribute("action")) {
      if (action->value == "preserve") {
        rule.action = Action::Preserve;
      } else if (action->value == "remove") {
        rule.action = Action::Remove;
      } else {
        invalid(action->line,
                "attribute 'action' must be preserve or remove, got '" + action->value + "'");
      }
    }
  }
}

}  // namespace

Config default_config() { return Config{}; }

Config parse_config(std::string_view document) {
  xml::Element root;
  try {
    root = xml::parse(document);
  } catch (const xml::ParseError& e) {
    throw ConfigError(ConfigError::Kind::Parse, e.line(), e.what());
  }

  if (root.name != "tokenizer-config") {
    invalid(root.line, "root element must be <tokenizer-config>, got <" + root.name + ">");
  }
  check_attributes(root, {});

  Config config = default_config();
  bool have_sequences = false;
  bool have_options = false;
  bool have_output = false;
  auto once = [](bool& flag, const xml::Element& el) {
    if (flag) invalid(el.line, "duplicate <" + el.name + "> element");
    flag = true;
  };

  for (const auto& child : root.children) {
    if (child.name == "sequences") {
      once(have_sequences, child);
      read_sequences(child, config);
    } else if (child.name == "options") {
      once(have_options, child);
      check_attributes(child, {"keep-punctuation", "tag-output", "stats"});
      check_no_children(child);
      read_bool(child, "keep-punctuation", config.keep_punctuation);
      read_bool(child, "tag-output", config.tag_output);
      read_bool(child, "stats", config.stats_enabled);
    } else if (child.name == "output") {
      once(have_output, child);
      check_attributes(child, {"path"});
      check_no_children(child);
      const auto* path = child.find_attribute("path");
      if (!path || path->value.empty()) {
        invalid(child.line, "<output> requires a non-empty path attribute");
      }
      config.output_path = path->value;
    } else {
      invalid(child.line, "unknown element <" + child.name + "> in <tokenizer-config>");
    }
  }
  return config;
}

Config load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError(ConfigError::Kind::Io, 0,
                      "cannot read config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(e.kind(), e.line(), path.string() + ":" + e.what());
  }
}

std::string serialize_config(const Config& config) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string out = "<tokenizer-config>\n  <sequences>\n";
  for (const auto& rule : config.rules()) {
    out += "    <sequence type=\"";
    out += kind_name(rule.kind);
    out += "\" enabled=\"";
    out += b(rule.enabled);
    out += "\" action=\"";
    out += action_name(rule.action);
    out += "\"/>\n";
  }
  out += "  </sequences>\n  <options keep-punctuation=\"";
  out += b(config.keep_punctuation);
  out += "\" tag-output=\"";
  out += b(config.tag_output);
  out += "\" stats=\"";
  out += b(config.stats_enabled);
  out += "\"/>\n";
  if (config.output_path) {
    out += "  <output path=\"" + xml::escape_attribute(*config.output_path) + "\"/>\n";
  }
  out += "</tokenizer-config>\n";
  return out;
}

}  // namespace seqtok
