#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hepmeme/authorship.hpp"
#include "hepmeme/corpus.hpp"

namespace hepmeme {

enum class Gender : std::uint8_t { Female, Male, Unknown };

std::string_view to_string(Gender g);

struct NameGenderEntry {
  double proportion_female = 0.0;
  std::uint64_t count = 0;
};

// Given name -> share of female bearers. Keys are normalized with
// text::normalize_name, so lookups ignore case and diacritics.
class NameGenderTable {
 public:
  // Merges with an existing entry by count-weighted average.
  void add(std::string_view name, double proportion_female, std::uint64_t count);
  const NameGenderEntry* find(std::string_view name) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t malformed_rows() const { return malformed_rows_; }

  static NameGenderTable parse(std::string_view text);
  static NameGenderTable load(const std::filesystem::path& path);

 private:
  std::unordered_map<std::string, NameGenderEntry> entries_;
  std::size_t malformed_rows_ = 0;
};

inline NameGenderTable load_name_table(const std::filesystem::path& path) {
  return NameGenderTable::load(path);
}

struct GenderConfig {
  double threshold = 0.95;
  std::uint64_t min_count = 5;

  // Throws InvalidConfig unless 0.5 < threshold <= 1.
  void validate() const;
};

// Hyphenated names that are missing from the table fall back to their
// first component ("jean-pierre" -> "jean").
Gender classify_given_name(std::string_view given, const NameGenderTable& table,
                           const GenderConfig& cfg);

// Label of the first author; Unknown for an authorless paper.
Gender gender_of_paper(std::span<const AuthorName> authors, const NameGenderTable& table,
                       const GenderConfig& cfg);

struct GenderAssignment {
  std::vector<Gender> paper;   // by paper index
  std::vector<Gender> author;  // by author slot

  PaperSet gendered_papers() const;
  PaperSet papers_of(Gender g) const;
};

GenderAssignment assign_genders(const Corpus& corpus, const Authorship& authorship,
                                const NameGenderTable& table, const GenderConfig& cfg,
                                unsigned threads = 0);

// Edges whose citing and cited papers are both gendered, ascending.
std::vector<CitationEdge> gendered_link_filter(const Corpus& corpus,
                                               const GenderAssignment& genders);

struct GenderCoverage {
  double pct_gendered_papers = 0;
  double pct_gendered_links = 0;
  double avg_papers_per_gendered_author = 0;
  double pct_female_citing = 0;
  double pct_male_citing = 0;
  double pct_female_cited = 0;
  double pct_male_cited = 0;
};

// Citing/cited shares are over distinct gendered first authors with at
// least one outgoing/incoming gendered link on their first-authored papers.
GenderCoverage gender_coverage_report(const Corpus& corpus, const Authorship& authorship,
                                      const GenderAssignment& genders);

}  // namespace hepmeme
