#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teamform/types.hpp"

namespace teamform {

/// One typed value from a config file.
struct ConfigValue {
  enum class Kind { kString, kInteger, kFloat, kBoolean, kArray };

  Kind kind = Kind::kString;
  std::string str;
  long long integer = 0;
  double real = 0.0;
  bool boolean = false;
  std::vector<ConfigValue> array;

  /// Typed accessors; the wrong kind raises std::invalid_argument.
  const std::string& as_string() const;
  long long as_integer() const;
  double as_float() const;  // integers widen to float
  bool as_boolean() const;
  const std::vector<ConfigValue>& as_array() const;
  /// Array of strings flattened; non-string elements raise.
  std::vector<std::string> as_string_array() const;
};

/// A small TOML-style config reader covering what this project's files use:
///
///   # comment
///   key = "string"            (escapes: \" \\ \n \t)
///   count = 42                trials = 1e2 is a float, not an int
///   ratio = 0.75              flag = true
///   list = ["a", "b",
///           "c"]              (arrays may span lines, trailing comma ok)
///   [section]
///   key = 7
///
/// Keys are bare (letters, digits, '-', '_'). Keys before any section header
/// live in the root section "". Section and key order is preserved.
/// Duplicate sections or duplicate keys in one section are errors.
/// Syntax errors raise ParseError with the byte offset.
class ConfigFile {
 public:
  static ConfigFile parse(std::string_view text);
  static ConfigFile load(const std::string& path);

  /// Section names in file order ("" first when root keys exist).
  std::vector<std::string> sections() const;
  bool has_section(const std::string& section) const;

  /// Keys of one section in file order; empty when the section is absent.
  std::vector<std::string> keys(const std::string& section) const;

  /// nullptr when missing.
  const ConfigValue* find(const std::string& section, const std::string& key) const;
  /// Raises std::invalid_argument when missing.
  const ConfigValue& get(const std::string& section, const std::string& key) const;

  /// Convenience lookups with defaults.
  long long get_integer(const std::string& section, const std::string& key,
                        long long fallback) const;
  double get_float(const std::string& section, const std::string& key, double fallback) const;
  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) const;

 private:
  using Entries = std::vector<std::pair<std::string, ConfigValue>>;
  std::vector<std::pair<std::string, Entries>> sections_;

  Entries* section_entries(const std::string& name);
  const Entries* section_entries(const std::string& name) const;
};

}  // namespace teamform
