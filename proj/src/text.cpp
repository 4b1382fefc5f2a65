#include "hepmeme/text.hpp"

#include <array>
#include <cstdint>

namespace hepmeme::text {
namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

// Length of a well-formed UTF-8 sequence at s[i], 0 if ill-formed.
std::size_t utf8_sequence(std::string_view s, std::size_t i, std::uint32_t& cp) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    cp = b0;
    return 1;
  }
  std::size_t len;
  std::uint32_t min;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

// Base letters for U+00C0..U+017F; '*' marks multi-letter expansions and
// '-' code points that are kept unchanged.
constexpr std::string_view kLatin1 =
    "AAAAAA*CEEEEIIIIDNOOOOO-OUUUUY**aaaaaa*ceeeeiiiidnooooo-ouuuuy*y";
constexpr std::string_view kLatinExtA =
    "AaAaAaCcCcCcCcDdDdEeEeEeEeEeGgGgGgGgHhHhIiIiIiIiIi**JjKkkLlLlLlLlLlNnNnNnnNnOoOoOo**"
    "RrRrRrSsSsSsSsTtTtTtUuUuUuUuUuUuWwYyYZzZzZzs";

std::string_view expansion(std::uint32_t cp) {
  switch (cp) {
    case 0xC6: return "AE";
    case 0xDE: return "TH";
    case 0xDF: return "ss";
    case 0xE6: return "ae";
    case 0xFE: return "th";
    case 0x132: return "IJ";
    case 0x133: return "ij";
    case 0x152: return "OE";
    case 0x153: return "oe";
    default: return {};
  }
}

}  // namespace

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (is_space(c)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string to_valid_utf8(std::string_view bytes) {
  std::string out;
  out.reserve(bytes.size());
  for (std::size_t i = 0; i < bytes.size();) {
    std::uint32_t cp = 0;
    std::size_t len = utf8_sequence(bytes, i, cp);
    if (len == 0) {
      append_utf8(out, static_cast<unsigned char>(bytes[i]));
      ++i;
    } else {
      out.append(bytes.substr(i, len));
      i += len;
    }
  }
  return out;
}

std::string strip_tex_accents(std::string_view s) {
  static constexpr std::string_view kAccentSymbols = "'`^\"~=.";
  static constexpr std::string_view kAccentWords = "cvuHkrdbt";
  struct Special {
    std::string_view word, text;
  };
  static constexpr std::array<Special, 13> kSpecials{{{"ss", "ss"},
                                                      {"o", "o"},
                                                      {"O", "O"},
                                                      {"l", "l"},
                                                      {"L", "L"},
                                                      {"i", "i"},
                                                      {"j", "j"},
                                                      {"aa", "a"},
                                                      {"AA", "A"},
                                                      {"ae", "ae"},
                                                      {"AE", "AE"},
                                                      {"oe", "oe"},
                                                      {"OE", "OE"}}};
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == '{' || c == '}') {
      ++i;
      continue;
    }
    if (c != '\\') {
      out += c;
      ++i;
      continue;
    }
    ++i;
    if (i >= s.size()) break;
    if (!is_alpha(s[i])) {
      if (kAccentSymbols.find(s[i]) != std::string_view::npos) ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && is_alpha(s[j])) ++j;
    std::string_view word = s.substr(i, j - i);
    i = j;
    bool matched = false;
    if (word.size() == 1 && kAccentWords.find(word[0]) != std::string_view::npos) {
      matched = true;
    } else {
      for (const auto& sp : kSpecials) {
        if (sp.word == word) {
          out += sp.text;
          matched = true;
          break;
        }
      }
    }
    // A control word swallows one following space ("\v s", "\ss e").
    if (matched && i < s.size() && s[i] == ' ') ++i;
  }
  return out;
}

std::string strip_diacritics(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  for (std::size_t i = 0; i < utf8.size();) {
    std::uint32_t cp = 0;
    std::size_t len = utf8_sequence(utf8, i, cp);
    if (len == 0) {
      ++i;
      continue;
    }
    std::string_view seq = utf8.substr(i, len);
    i += len;
    if (cp >= 0x300 && cp <= 0x36F) continue;  // combining marks
    char base = 0;
    if (cp >= 0xC0 && cp <= 0xFF) {
      base = kLatin1[cp - 0xC0];
    } else if (cp >= 0x100 && cp <= 0x17F) {
      base = kLatinExtA[cp - 0x100];
    }
    if (base == 0 || base == '-') {
      out.append(seq);
    } else if (base == '*') {
      out.append(expansion(cp));
    } else {
      out += base;
    }
  }
  return out;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  return out;
}

std::string normalize_name(std::string_view s) {
  std::string folded = ascii_lower(strip_diacritics(to_valid_utf8(strip_tex_accents(s))));
  std::string spaced;
  spaced.reserve(folded.size() + 8);
  for (std::size_t i = 0; i < folded.size(); ++i) {
    char c = folded[i];
    if (c == '~') c = ' ';
    spaced += c;
    if (c == '.' && i + 1 < folded.size() && is_alpha(folded[i + 1])) spaced += ' ';
  }
  return collapse_whitespace(spaced);
}

}  // namespace hepmeme::text
