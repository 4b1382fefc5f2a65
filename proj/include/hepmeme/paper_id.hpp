#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace hepmeme {

// Canonical identifier of a hep-th paper: the 7-digit arXiv number read as
// an integer ("hep-th/0001001" -> 1001). The edge list uses this form.
class PaperId {
 public:
  static constexpr std::uint32_t kMax = 9'999'999;

  constexpr PaperId() = default;
  // Throws InvalidPaperId unless 0 < value <= kMax.
  explicit PaperId(std::uint32_t value);

  constexpr std::uint32_t value() const { return value_; }

  // Parses "hep-th/NNNNNNN" (exactly seven digits).
  static PaperId from_arxiv(std::string_view text);
  // Parses a bare decimal node id as found in the edge list.
  static PaperId from_decimal(std::string_view text);

  // "hep-th/NNNNNNN", zero padded.
  std::string to_arxiv() const;
  std::string to_digits() const;

  friend constexpr auto operator<=>(PaperId, PaperId) = default;

 private:
  std::uint32_t value_ = 0;
};

}  // namespace hepmeme

template <>
struct std::hash<hepmeme::PaperId> {
  std::size_t operator()(hepmeme::PaperId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value());
  }
};
