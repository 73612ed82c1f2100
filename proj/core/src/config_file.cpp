#include "teamform/config_file.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace teamform {

const std::string& ConfigValue::as_string() const {
  if (kind != Kind::kString) throw std::invalid_argument("config value is not a string");
  return str;
}

long long ConfigValue::as_integer() const {
  if (kind != Kind::kInteger) throw std::invalid_argument("config value is not an integer");
  return integer;
}

double ConfigValue::as_float() const {
  if (kind == Kind::kInteger) return static_cast<double>(integer);
  if (kind != Kind::kFloat) throw std::invalid_argument("config value is not a number");
  return real;
}

bool ConfigValue::as_boolean() const {
  if (kind != Kind::kBoolean) throw std::invalid_argument("config value is not a boolean");
  return boolean;
}

const std::vector<ConfigValue>& ConfigValue::as_array() const {
  if (kind != Kind::kArray) throw std::invalid_argument("config value is not an array");
  return array;
}

std::vector<std::string> ConfigValue::as_string_array() const {
  std::vector<std::string> out;
  for (const ConfigValue& v : as_array()) out.push_back(v.as_string());
  return out;
}

namespace {

bool key_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '-' || c == '_' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : s_(text) {}

  void run(std::vector<std::pair<std::string, std::vector<std::pair<std::string, ConfigValue>>>>&
               sections) {
    sections_ = &sections;
    while (true) {
      skip_blank();
      if (pos_ >= s_.size()) return;
      if (s_[pos_] == '[') {
        parse_section_header();
      } else {
        parse_key_value();
      }
    }
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::string current_;
  std::vector<std::pair<std::string, std::vector<std::pair<std::string, ConfigValue>>>>* sections_ =
      nullptr;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  // Whitespace, newlines and full-line / trailing comments between entries.
  void skip_blank() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        return;
      }
    }
  }

  // Spaces and tabs only (stays on the current line).
  void skip_inline() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }

  void end_of_entry() {
    skip_inline();
    if (pos_ >= s_.size()) return;
    if (s_[pos_] == '#') {
      while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      return;
    }
    if (s_[pos_] == '\n' || s_[pos_] == '\r') return;
    fail("unexpected trailing characters after value");
  }

  std::string parse_key() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && key_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a key");
    return std::string(s_.substr(start, pos_ - start));
  }

  void parse_section_header() {
    ++pos_;  // '['
    skip_inline();
    std::string name = parse_key();
    skip_inline();
    if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']' closing the section header");
    ++pos_;
    for (const auto& [existing, _] : *sections_) {
      if (existing == name) fail("duplicate section [" + name + "]");
    }
    sections_->push_back({name, {}});
    current_ = name;
    end_of_entry();
  }

  std::vector<std::pair<std::string, ConfigValue>>& entries() {
    for (auto& [name, list] : *sections_) {
      if (name == current_) return list;
    }
    sections_->push_back({current_, {}});
    return sections_->back().second;
  }

  void parse_key_value() {
    std::string key = parse_key();
    skip_inline();
    if (pos_ >= s_.size() || s_[pos_] != '=') fail("expected '=' after key '" + key + "'");
    ++pos_;
    skip_inline();
    ConfigValue value = parse_value();
    auto& list = entries();
    for (const auto& [existing, _] : list) {
      if (existing == key) fail("duplicate key '" + key + "'");
    }
    list.emplace_back(std::move(key), std::move(value));
    end_of_entry();
  }

  ConfigValue parse_value() {
    if (pos_ >= s_.size()) fail("expected a value");
    char c = s_[pos_];
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_boolean();
    return parse_number();
  }

  ConfigValue parse_string() {
    ++pos_;  // opening quote
    ConfigValue v;
    v.kind = ConfigValue::Kind::kString;
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated string");
      char c = s_[pos_++];
      if (c == '"') break;
      if (c == '\n') fail("strings may not span lines");
      if (c == '\\') {
        if (pos_ >= s_.size()) fail("dangling escape");
        char e = s_[pos_++];
        switch (e) {
          case '"': v.str.push_back('"'); break;
          case '\\': v.str.push_back('\\'); break;
          case 'n': v.str.push_back('\n'); break;
          case 't': v.str.push_back('\t'); break;
          default: fail(std::string("unsupported escape '\\") + e + "'");
        }
      } else {
        v.str.push_back(c);
      }
    }
    return v;
  }

  ConfigValue parse_boolean() {
    if (s_.substr(pos_, 4) == "true") {
      pos_ += 4;
      ConfigValue v;
      v.kind = ConfigValue::Kind::kBoolean;
      v.boolean = true;
      return v;
    }
    if (s_.substr(pos_, 5) == "false") {
      pos_ += 5;
      ConfigValue v;
      v.kind = ConfigValue::Kind::kBoolean;
      v.boolean = false;
      return v;
    }
    fail("expected a value (strings must be quoted)");
  }

  ConfigValue parse_number() {
    std::size_t start = pos_;
    bool is_float = false;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' || c == 'e' || c == 'E') {
        is_float = true;
        ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
      } else {
        break;
      }
    }
    if (pos_ == start) fail("expected a value");
    std::string text(s_.substr(start, pos_ - start));
    ConfigValue v;
    char* end = nullptr;
    if (is_float) {
      v.kind = ConfigValue::Kind::kFloat;
      v.real = std::strtod(text.c_str(), &end);
    } else {
      v.kind = ConfigValue::Kind::kInteger;
      v.integer = std::strtoll(text.c_str(), &end, 10);
    }
    if (end == nullptr || *end != '\0') {
      pos_ = start;
      fail("malformed number '" + text + "'");
    }
    return v;
  }

  ConfigValue parse_array() {
    ++pos_;  // '['
    ConfigValue v;
    v.kind = ConfigValue::Kind::kArray;
    while (true) {
      skip_blank();  // arrays may span lines
      if (pos_ >= s_.size()) fail("unterminated array");
      if (s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      v.array.push_back(parse_value());
      skip_blank();
      if (pos_ >= s_.size()) fail("unterminated array");
      if (s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      fail("expected ',' or ']' in array");
    }
  }
};

}  // namespace

ConfigFile ConfigFile::parse(std::string_view text) {
  ConfigFile file;
  Reader(text).run(file.sections_);
  return file;
}

ConfigFile ConfigFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return parse(text);
}

std::vector<std::string> ConfigFile::sections() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : sections_) out.push_back(name);
  return out;
}

bool ConfigFile::has_section(const std::string& section) const {
  return section_entries(section) != nullptr;
}

std::vector<std::string> ConfigFile::keys(const std::string& section) const {
  std::vector<std::string> out;
  if (const Entries* list = section_entries(section)) {
    for (const auto& [key, _] : *list) out.push_back(key);
  }
  return out;
}

const ConfigValue* ConfigFile::find(const std::string& section, const std::string& key) const {
  const Entries* list = section_entries(section);
  if (list == nullptr) return nullptr;
  for (const auto& [k, v] : *list) {
    if (k == key) return &v;
  }
  return nullptr;
}

const ConfigValue& ConfigFile::get(const std::string& section, const std::string& key) const {
  const ConfigValue* v = find(section, key);
  if (v == nullptr) {
    throw std::invalid_argument("missing config key '" + key + "' in section [" + section + "]");
  }
  return *v;
}

long long ConfigFile::get_integer(const std::string& section, const std::string& key,
                                  long long fallback) const {
  const ConfigValue* v = find(section, key);
  return v == nullptr ? fallback : v->as_integer();
}

double ConfigFile::get_float(const std::string& section, const std::string& key,
                             double fallback) const {
  const ConfigValue* v = find(section, key);
  return v == nullptr ? fallback : v->as_float();
}

std::string ConfigFile::get_string(const std::string& section, const std::string& key,
                                   const std::string& fallback) const {
  const ConfigValue* v = find(section, key);
  return v == nullptr ? fallback : v->as_string();
}

ConfigFile::Entries* ConfigFile::section_entries(const std::string& name) {
  for (auto& [n, list] : sections_) {
    if (n == name) return &list;
  }
  return nullptr;
}

const ConfigFile::Entries* ConfigFile::section_entries(const std::string& name) const {
  for (const auto& [n, list] : sections_) {
    if (n == name) return &list;
  }
  return nullptr;
}

}  // namespace teamform
