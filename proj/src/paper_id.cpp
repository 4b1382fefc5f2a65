#include "hepmeme/paper_id.hpp"

#include <charconv>
#include <cstdio>

#include "hepmeme/errors.hpp"

namespace hepmeme {

PaperId::PaperId(std::uint32_t value) : value_(value) {
  if (value == 0 || value > kMax)
    throw InvalidPaperId("paper id out of range: " + std::to_string(value));
}

PaperId PaperId::from_arxiv(std::string_view text) {
  constexpr std::string_view prefix = "hep-th/";
  if (!text.starts_with(prefix) || text.size() != prefix.size() + 7)
    throw InvalidPaperId("not a hep-th/NNNNNNN identifier: '" + std::string(text) + "'");
  std::string_view digits = text.substr(prefix.size());
  for (char c : digits)
    if (c < '0' || c > '9')
      throw InvalidPaperId("not a hep-th/NNNNNNN identifier: '" + std::string(text) + "'");
  return from_decimal(digits);
}

PaperId PaperId::from_decimal(std::string_view text) {
  std::uint32_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw InvalidPaperId("not a decimal paper id: '" + std::string(text) + "'");
  return PaperId(v);
}

std::string PaperId::to_digits() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%07u", static_cast<unsigned>(value_));
  return buf;
}

std::string PaperId::to_arxiv() const { return "hep-th/" + to_digits(); }

}  // namespace hepmeme
