#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hepmeme/authorship.hpp"
#include "hepmeme/corpus.hpp"
#include "hepmeme/gender.hpp"
#include "hepmeme/memes.hpp"
#include "hepmeme/propagation.hpp"
#include "hepmeme/stats_report.hpp"

namespace hepmeme {

struct AnalysisOptions {
  GenderConfig gender;
  double meme_threshold = 0.08;
  TextOptions text;
  UniverseMode universe_mode = UniverseMode::Shared;
  SelfCitationMode self_citation = SelfCitationMode::FirstAuthor;
  unsigned threads = 0;

  void validate() const;
};

struct MemeFrequency {
  std::string meme;
  std::uint64_t count_all = 0;       // carrier papers, whole corpus
  std::uint64_t count_gendered = 0;  // carrier papers, gendered universe
  double f_all = 0;
  double f_gendered = 0;
};

struct SelfCitation {
  std::optional<double> all, female, male;
};

// Everything the report bundle shows. Steps that cannot be computed on the
// given data leave their optional empty and add a line to `warnings`.
struct AnalysisResult {
  Authorship authorship;
  GenderAssignment genders;
  GenderCoverage coverage;
  Table1 table1;
  Table2 table2;
  SelfCitation self_citation;
  AuthorSeries distributions;
  std::optional<AuthorCorrelations> author_corr;
  LinkAverages links;
  std::vector<MemeFrequency> meme_frequencies;  // lexicon order, ranked by count_all
  std::vector<std::string> selected_memes;
  std::vector<ScoreRow> score_table;
  std::optional<CorrelationResult> corr_g, corr_F, corr_M;
  std::vector<std::string> warnings;

  bool correlations_insufficient = false;
};

AnalysisResult run_analysis(const Corpus& corpus, const NameGenderTable& names,
                            const MemeLexicon& lexicon, const AnalysisOptions& options);

}  // namespace hepmeme
