#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace teamform {

/// Splits a publication title into candidate skill tokens.
///
/// Rules (kept deliberately simple so results are reproducible):
///   - ASCII letters are lowercased; runs of letters/digits form tokens.
///     Bytes >= 0x80 (multibyte UTF-8) count as word characters so accented
///     words stay in one piece.
///   - Everything else (punctuation, whitespace, hyphens) separates tokens,
///     so "Real-time" yields "real" and "time".
///   - Tokens shorter than two bytes and tokens that are pure ASCII numbers
///     are dropped.
///
/// Duplicates and order are preserved; callers that need occurrence counts
/// rely on that.
std::vector<std::string> tokenize_title(std::string_view title);

/// Classic Porter stemming (the 1980 suffix-stripping algorithm, matching the
/// author's reference implementation including its two published departures:
/// -bli -> -ble and -logi -> -log).  Expects a lowercase token; words of
/// length <= 2 are returned unchanged.
///
///   stem("ranking") == "rank"      stem("probabilistic") == "probabilist"
///   stem("databases") == "databas" stem("query") == "queri"
std::string porter_stem(std::string_view word);

/// Identifier of the bundled stop-word list. Versioned so that graphs built
/// with different lists are never silently comparable.
inline constexpr const char* kStopwordListId = "en-v1";

/// The bundled English stop-word list (127 words), sorted ascending.
const std::vector<std::string>& stopword_list();

/// Membership test against stopword_list(). Expects a lowercase token.
bool is_stopword(std::string_view word);

/// Full title pipeline: tokenize, drop stop words, stem what remains.
/// Duplicates and order are preserved (one entry per surviving occurrence).
std::vector<std::string> title_skill_stems(std::string_view title);

}  // namespace teamform
