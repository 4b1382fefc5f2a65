#pragma once

#include <string>
#include <string_view>
#include <vector>

// Text helpers shared by the name and abstract pipelines. All functions
// take and return UTF-8.
namespace hepmeme::text {

std::string_view trim(std::string_view s);

// Runs of ASCII whitespace become one space; leading/trailing removed.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string_view> split_whitespace(std::string_view s);

// Re-encodes the input so it is valid UTF-8. Bytes that do not start a
// well-formed sequence are read as Latin-1 code points.
std::string to_valid_utf8(std::string_view bytes);

// Removes TeX accent macros while keeping the accented letter:
// Ara\'{u}jo -> Araujo, {\"o} -> o, \c{c} -> c, \ss -> ss. Braces are
// dropped; any other control word is deleted.
std::string strip_tex_accents(std::string_view s);

// Canonical decomposition followed by removal of combining marks, for the
// Latin ranges that occur in author names (U+00C0..U+017F) plus the
// combining block U+0300..U+036F. Ligatures expand (AE -> AE, sharp s -> ss).
std::string strip_diacritics(std::string_view utf8);

std::string ascii_lower(std::string_view s);

// Full name normalization used for author identity and name-table keys:
// TeX accents, diacritics, case fold, "J.Smith" -> "j. smith", single spaces.
std::string normalize_name(std::string_view s);

}  // namespace hepmeme::text
