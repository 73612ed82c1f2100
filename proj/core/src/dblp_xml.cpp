#include "teamform/dblp_xml.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace teamform {

namespace {

void append_utf8(std::string& out, unsigned int cp) {
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

const std::unordered_map<std::string_view, unsigned int>& named_entities() {
  // XML's five plus the Latin-1 names DBLP's DTD declares.
  static const std::unordered_map<std::string_view, unsigned int> table = {
      {"amp", '&'},      {"lt", '<'},       {"gt", '>'},      {"apos", '\''},
      {"quot", '"'},     {"Agrave", 192},   {"Aacute", 193},  {"Acirc", 194},
      {"Atilde", 195},   {"Auml", 196},     {"Aring", 197},   {"AElig", 198},
      {"Ccedil", 199},   {"Egrave", 200},   {"Eacute", 201},  {"Ecirc", 202},
      {"Euml", 203},     {"Igrave", 204},   {"Iacute", 205},  {"Icirc", 206},
      {"Iuml", 207},     {"ETH", 208},      {"Ntilde", 209},  {"Ograve", 210},
      {"Oacute", 211},   {"Ocirc", 212},    {"Otilde", 213},  {"Ouml", 214},
      {"times", 215},    {"Oslash", 216},   {"Ugrave", 217},  {"Uacute", 218},
      {"Ucirc", 219},    {"Uuml", 220},     {"Yacute", 221},  {"THORN", 222},
      {"szlig", 223},    {"agrave", 224},   {"aacute", 225},  {"acirc", 226},
      {"atilde", 227},   {"auml", 228},     {"aring", 229},   {"aelig", 230},
      {"ccedil", 231},   {"egrave", 232},   {"eacute", 233},  {"ecirc", 234},
      {"euml", 235},     {"igrave", 236},   {"iacute", 237},  {"icirc", 238},
      {"iuml", 239},     {"eth", 240},      {"ntilde", 241},  {"ograve", 242},
      {"oacute", 243},   {"ocirc", 244},    {"otilde", 245},  {"ouml", 246},
      {"oslash", 248},   {"ugrave", 249},   {"uacute", 250},  {"ucirc", 251},
      {"uuml", 252},     {"yacute", 253},   {"thorn", 254},   {"yuml", 255},
      {"reg", 174},      {"micro", 181}};
  return table;
}

bool name_start_char(unsigned char c) {
  return std::isalpha(c) != 0 || c == '_' || c == ':';
}

bool name_char(unsigned char c) {
  return std::isalnum(c) != 0 || c == '_' || c == ':' || c == '-' || c == '.';
}

std::string trimmed(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::vector<RawRecord> run() {
    skip_bom();
    while (true) {
      skip_misc();
      if (pos_ >= s_.size()) break;
      if (s_[pos_] != '<') fail("text outside of any element");
      parse_element(nullptr, nullptr);
    }
    return std::move(records_);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<RawRecord> records_;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  bool starts_with(std::string_view prefix) const {
    return s_.substr(pos_, prefix.size()) == prefix;
  }

  void expect(std::string_view text) {
    if (!starts_with(text)) fail("expected '" + std::string(text) + "'");
    pos_ += text.size();
  }

  void skip_bom() {
    if (starts_with("\xEF\xBB\xBF")) pos_ += 3;
  }

  void skip_whitespace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  /// Skips whitespace, the XML prolog, processing instructions, comments,
  /// and the DOCTYPE declaration — everything legal between elements at the
  /// document level.
  void skip_misc() {
    while (true) {
      skip_whitespace();
      if (starts_with("<?")) {
        skip_until("?>");
      } else if (starts_with("<!--")) {
        skip_until("-->");
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_until(std::string_view closer) {
    std::size_t at = s_.find(closer, pos_);
    if (at == std::string_view::npos) fail("unterminated '" + std::string(closer) + "' construct");
    pos_ = at + closer.size();
  }

  void skip_doctype() {
    pos_ += 9;  // "<!DOCTYPE"
    int bracket = 0;
    while (pos_ < s_.size()) {
      char c = s_[pos_++];
      if (c == '[') ++bracket;
      else if (c == ']') --bracket;
      else if (c == '>' && bracket == 0) return;
    }
    fail("unterminated DOCTYPE declaration");
  }

  std::string parse_name() {
    if (pos_ >= s_.size() || !name_start_char(static_cast<unsigned char>(s_[pos_]))) {
      fail("expected a name");
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && name_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  /// Resolves the entity starting just after '&'; pos_ is on the first
  /// character of its name and ends past the ';'.
  void parse_entity(std::string& out) {
    std::size_t end = s_.find(';', pos_);
    if (end == std::string_view::npos || end - pos_ > 32) fail("unterminated entity reference");
    std::string_view name = s_.substr(pos_, end - pos_);
    std::string text = resolve_entity(name);
    if (text.empty()) fail("unknown entity '" + std::string(name) + "'");
    out += text;
    pos_ = end + 1;
  }

  /// Parses attributes up to (and including) the tag's closing '>'.
  /// Returns true when the tag was self-closing.
  bool parse_attributes(std::vector<std::pair<std::string, std::string>>& attrs) {
    while (true) {
      skip_whitespace();
      if (pos_ >= s_.size()) fail("unterminated start tag");
      if (s_[pos_] == '>') {
        ++pos_;
        return false;
      }
      if (starts_with("/>")) {
        pos_ += 2;
        return true;
      }
      std::string name = parse_name();
      skip_whitespace();
      expect("=");
      skip_whitespace();
      if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\'')) {
        fail("attribute value must be quoted");
      }
      char quote = s_[pos_++];
      std::string value;
      while (true) {
        if (pos_ >= s_.size()) fail("unterminated attribute value");
        char c = s_[pos_++];
        if (c == quote) break;
        if (c == '&') {
          parse_entity(value);
        } else {
          value.push_back(c);
        }
      }
      attrs.emplace_back(std::move(name), std::move(value));
    }
  }

  /// Parses one element whose '<' is at pos_. Text content is appended to
  /// `sink` when non-null. `rec` is the record whose *direct* children are
  /// being parsed, if any.
  void parse_element(RawRecord* rec, std::string* sink) {
    std::size_t open_at = pos_;
    expect("<");
    std::string name = parse_name();
    std::vector<std::pair<std::string, std::string>> attrs;
    bool self_closing = parse_attributes(attrs);

    const bool is_record = rec == nullptr && (name == "article" || name == "inproceedings");
    RawRecord record;
    if (is_record) {
      record.kind = name;
      record.byte_offset = open_at;
      for (const auto& [k, v] : attrs) {
        if (k == "key") record.key = v;
      }
    }

    // Direct children of a record that carry the fields we keep.
    std::string captured;
    const bool capture = rec != nullptr && (name == "author" || name == "title" ||
                                            name == "year" || name == "booktitle");
    std::string* inner_sink = capture ? &captured : sink;

    if (!self_closing) {
      parse_content(name, is_record ? &record : nullptr, inner_sink);
    }

    if (capture) {
      std::string text = trimmed(captured);
      if (name == "author") {
        rec->authors.push_back(std::move(text));
      } else if (name == "title") {
        rec->title = std::move(text);
      } else if (name == "booktitle") {
        rec->booktitle = std::move(text);
      } else {  // year
        rec->year = static_cast<int>(std::strtol(text.c_str(), nullptr, 10));
      }
    }
    if (is_record) records_.push_back(std::move(record));
  }

  /// Parses element content up to and including `</name>`.
  void parse_content(const std::string& name, RawRecord* rec, std::string* sink) {
    while (true) {
      if (pos_ >= s_.size()) fail("unterminated element '" + name + "'");
      char c = s_[pos_];
      if (c == '<') {
        if (starts_with("</")) {
          pos_ += 2;
          std::string close = parse_name();
          if (close != name) {
            fail("mismatched close tag '</" + close + ">' for element '" + name + "'");
          }
          skip_whitespace();
          expect(">");
          return;
        }
        if (starts_with("<!--")) {
          skip_until("-->");
          continue;
        }
        if (starts_with("<![CDATA[")) {
          pos_ += 9;
          std::size_t end = s_.find("]]>", pos_);
          if (end == std::string_view::npos) fail("unterminated CDATA section");
          if (sink) sink->append(s_.substr(pos_, end - pos_));
          pos_ = end + 3;
          continue;
        }
        // Child element. Nested markup inside captured fields (e.g. <i> in a
        // title) contributes its text to the same sink; a record's other
        // children are consumed silently.
        parse_element(rec, sink);
        continue;
      }
      if (c == '&') {
        ++pos_;
        std::string piece;
        parse_entity(piece);
        if (sink) sink->append(piece);
        continue;
      }
      if (sink) sink->push_back(c);
      ++pos_;
    }
  }
};

}  // namespace

std::string resolve_entity(std::string_view name) {
  std::string out;
  if (!name.empty() && name[0] == '#') {
    unsigned long cp = 0;
    char* end = nullptr;
    std::string digits(name.substr(1));
    if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
      cp = std::strtoul(digits.c_str() + 1, &end, 16);
      if (end == digits.c_str() + 1 || *end != '\0') return {};
    } else {
      cp = std::strtoul(digits.c_str(), &end, 10);
      if (end == digits.c_str() || *end != '\0') return {};
    }
    if (cp == 0 || cp > 0x10FFFF) return {};
    append_utf8(out, static_cast<unsigned int>(cp));
    return out;
  }
  auto it = named_entities().find(name);
  if (it == named_entities().end()) return {};
  append_utf8(out, it->second);
  return out;
}

std::vector<RawRecord> parse_dblp_xml(std::string_view xml) { return Parser(xml).run(); }

std::vector<RawRecord> load_dblp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open XML file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  return parse_dblp_xml(text);
}

}  // namespace teamform
