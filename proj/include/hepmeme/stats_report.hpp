#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hepmeme/authorship.hpp"
#include "hepmeme/corpus.hpp"
#include "hepmeme/gender.hpp"

namespace hepmeme {

struct PaperCentered {
  std::size_t papers = 0;
  std::size_t citations = 0;
  CitingCitedSummary citing_cited;
};

struct Table1 {
  PaperCentered all;
  PaperCentered gendered;
};

Table1 paper_centered_summary(const Corpus& corpus, const GenderAssignment& genders);

struct GenderSplit {
  std::size_t all = 0, female = 0, male = 0, missing = 0;
};

struct Table2 {
  GenderSplit first_authors;
  GenderSplit second_authors;
  double pct_female_citing = 0, pct_male_citing = 0;
  double pct_female_cited = 0, pct_male_cited = 0;
};

Table2 author_centered_summary(const Corpus& corpus, const Authorship& authorship,
                               const GenderAssignment& genders, const NameGenderTable& table,
                               const GenderConfig& cfg);

enum class SelfCitationMode : std::uint8_t { FirstAuthor, AnyAuthor };

// Fraction of edges whose two papers share an author (first author only by
// default). With `citing_gender`, only edges whose citing paper has that
// label are counted, in numerator and denominator. Throws EmptyEdgeSet.
double self_citation_rate(const Corpus& corpus, const Authorship& authorship,
                          const GenderAssignment& genders,
                          std::optional<Gender> citing_gender = std::nullopt,
                          SelfCitationMode mode = SelfCitationMode::FirstAuthor);

struct AuthorSeries {
  std::vector<std::uint32_t> author_id;
  std::vector<std::uint64_t> n_papers;
  std::vector<std::uint64_t> citations_made;
  std::vector<std::uint64_t> citations_received;
};

AuthorSeries author_distributions(const Authorship& authorship);

struct AuthorCorrelations {
  double r_papers_made = 0;
  double r_papers_received = 0;
  double r_made_received = 0;
};

// Throws InsufficientData / DegenerateVariance.
AuthorCorrelations author_correlations(const Authorship& authorship);

// Directed author network: first author of the citing paper -> first
// author of the cited paper, distinct pairs, no self links. Means are over
// authors with at least one incoming (resp. outgoing) link.
struct LinkAverages {
  std::size_t author_links = 0;
  std::size_t citing_authors = 0;
  std::size_t cited_authors = 0;
  double mean_in_links = 0;
  double mean_out_links = 0;
  std::size_t max_in_links = 0;
  std::size_t max_out_links = 0;
};

LinkAverages link_averages(const Corpus& corpus, const Authorship& authorship);

}  // namespace hepmeme
