#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hepmeme/corpus.hpp"

namespace hepmeme {

struct AuthorName {
  std::string given;            // "" when the name starts with an initial
  std::string family;
  std::string normalized_full;  // identity key

  friend bool operator==(const AuthorName&, const AuthorName&) = default;
};

// Splits a raw "Authors:" field into names, first author first.
// Parenthesized segments are removed (unbalanced '(' truncates), then the
// field is split on ',', '&' and the standalone word "and".
std::vector<AuthorName> split_author_field(std::string_view authors_raw);

// Builds an AuthorName from one already isolated fragment.
AuthorName make_author_name(std::string_view fragment);

// True for "j.", "J", "j.-p.", "ch." and similar abbreviations.
bool is_initial(std::string_view token);

struct AuthorRecord {
  std::uint32_t author_id = 0;  // 1-based alphabetical rank of normalized_full
  AuthorName name;
  std::vector<PaperId> papers_first_authored;  // ascending
  std::uint64_t citations_made = 0;
  std::uint64_t citations_received = 0;
};

// First-author view of a corpus. Citation counts only use edges whose two
// endpoints have a first author, so total made == total received.
struct Authorship {
  std::vector<std::vector<AuthorName>> paper_authors;       // by paper index
  std::vector<std::optional<std::uint32_t>> first_author;   // paper index -> author slot
  std::vector<AuthorRecord> authors;                         // slot = author_id - 1

  std::size_t papers_with_authors() const;
  std::uint64_t edges_between_authored_papers = 0;
};

Authorship assign_author_ids(const Corpus& corpus, unsigned threads = 0);

}  // namespace hepmeme
