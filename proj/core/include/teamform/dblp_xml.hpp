#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "teamform/types.hpp"

namespace teamform {

/// One bibliographic record pulled from a DBLP-style XML export.
struct RawRecord {
  std::string kind;                  // element name: "article", "inproceedings", ...
  std::string key;                   // the record's key attribute (may be empty)
  std::string title;                 // text content, nested markup stripped
  std::vector<std::string> authors;  // in document order
  std::string booktitle;             // empty when absent
  int year = 0;                      // 0 when absent
  std::size_t byte_offset = 0;       // where the record's open tag starts
};

/// Parses a DBLP-style XML document and returns every `article` and
/// `inproceedings` record, in document order. Other record kinds
/// (`proceedings`, `www`, ...) are consumed and dropped.
///
/// The parser is deliberately small: prolog, DOCTYPE (internal subset
/// included), comments, and CDATA sections are recognized and skipped;
/// character references and the usual named entities (XML's five plus the
/// Latin-1 set DBLP's DTD defines) are resolved to UTF-8. Markup nested
/// inside `title` (e.g. `<i>`) is stripped, keeping its text.
///
/// Malformed input — truncated tags, mismatched close tags, or an entity
/// outside the bundled table — raises ParseError carrying the byte offset.
std::vector<RawRecord> parse_dblp_xml(std::string_view xml);

/// Reads `path` fully and delegates to parse_dblp_xml. Missing or unreadable
/// file raises std::runtime_error.
std::vector<RawRecord> load_dblp_file(const std::string& path);

/// Resolves one named entity (the part between '&' and ';') to UTF-8 text,
/// or returns the empty string when the name is not in the bundled table.
/// Numeric forms ("#228", "#xE4") are handled here as well.
std::string resolve_entity(std::string_view name);

}  // namespace teamform
