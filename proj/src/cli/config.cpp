// SPDX-License-Identifier: Apache-2.0

#include "bcalc/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace bcalc::cli {

namespace {

enum class Kind { String, Int, Float };

const std::map<std::string, std::map<std::string, Kind>>& schema() {
  static const std::map<std::string, std::map<std::string, Kind>> s = {
      {"case", {{"id", Kind::String}, {"tolerance", Kind::Float}, {"perturb", Kind::Float}}},
      {"field", {{"expr", Kind::String}, {"dim", Kind::Int}}},
      {"quadrature", {{"order", Kind::Int}, {"workers", Kind::Int}}},
      {"render", {{"scene", Kind::String}, {"view", Kind::String}, {"out", Kind::String}}},
  };
  return s;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

// Parses a quoted string starting at s[0] == '"'; returns the value and sets
// `rest` to whatever follows the closing quote.
std::string parse_string(std::string_view s, std::string_view& rest, int line) {
  std::string out;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"') {
      rest = s.substr(i + 1);
      return out;
    }
    if (c == '\\') {
      if (++i >= s.size()) break;
      switch (s[i]) {
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        default: fail(line, "unsupported escape");
      }
    } else {
      out += c;
    }
  }
  fail(line, "unterminated string");
}

std::string_view strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (in_string && s[i] == '\\') {
      ++i;
    } else if (s[i] == '"') {
      in_string = !in_string;
    } else if (s[i] == '#' && !in_string) {
      return s.substr(0, i);
    }
  }
  return s;
}

Config::Value parse_value(std::string_view v, int line) {
  if (v.empty()) fail(line, "missing value");
  if (v.front() == '"') {
    std::string_view rest;
    std::string s = parse_string(v, rest, line);
    if (!trim(rest).empty()) fail(line, "trailing characters after string");
    return s;
  }
  if (v == "true") return true;
  if (v == "false") return false;
  std::string digits;
  for (char c : v) {
    if (c != '_') digits += c;
  }
  const char* b = digits.data();
  const char* e = b + digits.size();
  if (digits.front() == '+') ++b;
  long long i = 0;
  if (auto [p, ec] = std::from_chars(b, e, i); ec == std::errc() && p == e) return i;
  double d = 0.0;
  if (auto [p, ec] = std::from_chars(b, e, d); ec == std::errc() && p == e) return d;
  fail(line, "unsupported value '" + std::string(v) + "'");
}

}  // namespace

Config Config::parse(std::string_view text) {
  Config cfg;
  std::string section;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    const std::string_view line = trim(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!schema().count(section)) fail(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    if (section.empty()) fail(line_no, "key outside a section");
    const auto& keys = schema().at(section);
    const auto kind = keys.find(key);
    if (kind == keys.end()) fail(line_no, "unknown key '" + key + "' in [" + section + "]");
    Value v = parse_value(trim(line.substr(eq + 1)), line_no);
    const bool ok = (kind->second == Kind::String && std::holds_alternative<std::string>(v)) ||
                    (kind->second == Kind::Int && std::holds_alternative<long long>(v)) ||
                    (kind->second == Kind::Float &&
                     (std::holds_alternative<double>(v) || std::holds_alternative<long long>(v)));
    if (!ok) fail(line_no, "wrong value type for '" + key + "'");
    if (!cfg.values_[section].emplace(key, std::move(v)).second) fail(line_no, "duplicate key '" + key + "'");
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Config::Value* Config::find(const std::string& section, const std::string& key) const {
  const auto s = values_.find(section);
  if (s == values_.end()) return nullptr;
  const auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

std::optional<std::string> Config::get_string(const std::string& section, const std::string& key) const {
  const Value* v = find(section, key);
  if (!v) return std::nullopt;
  return std::get<std::string>(*v);
}

std::optional<long long> Config::get_int(const std::string& section, const std::string& key) const {
  const Value* v = find(section, key);
  if (!v) return std::nullopt;
  return std::get<long long>(*v);
}

std::optional<double> Config::get_double(const std::string& section, const std::string& key) const {
  const Value* v = find(section, key);
  if (!v) return std::nullopt;
  if (const auto* i = std::get_if<long long>(v)) return static_cast<double>(*i);
  return std::get<double>(*v);
}

}  // namespace bcalc::cli
