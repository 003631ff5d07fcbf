// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace bcalc::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat TOML subset: [section] headers, key = value lines, # comments. Values
// are basic strings ("..." with \" \\ \n \t escapes), booleans, integers and
// floats. Only the sections and keys below are accepted:
//   [case]       id (string), tolerance (float), perturb (float)
//   [field]      expr (string), dim (integer)
//   [quadrature] order (integer), workers (integer)
//   [render]     scene (string), view (string), out (string)
class Config {
 public:
  using Value = std::variant<bool, long long, double, std::string>;

  static Config parse(std::string_view text);
  // Throws ConfigError when the file cannot be read or parsed.
  static Config load(const std::string& path);

  std::optional<std::string> get_string(const std::string& section, const std::string& key) const;
  std::optional<long long> get_int(const std::string& section, const std::string& key) const;
  // Integers are accepted where a float is expected.
  std::optional<double> get_double(const std::string& section, const std::string& key) const;

 private:
  const Value* find(const std::string& section, const std::string& key) const;
  std::map<std::string, std::map<std::string, Value>> values_;
};

}  // namespace bcalc::cli
