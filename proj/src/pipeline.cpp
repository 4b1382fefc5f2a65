#include "hepmeme/pipeline.hpp"

#include <algorithm>

#include "hepmeme/errors.hpp"

namespace hepmeme {

void AnalysisOptions::validate() const {
  gender.validate();
  if (!(meme_threshold >= 0.0 && meme_threshold <= 1.0))
    throw InvalidConfig("meme threshold must lie in [0, 1], got " + std::to_string(meme_threshold));
}

AnalysisResult run_analysis(const Corpus& corpus, const NameGenderTable& names,
                            const MemeLexicon& lexicon, const AnalysisOptions& options) {
  options.validate();
  AnalysisResult r;
  const unsigned threads = options.threads;

  r.authorship = assign_author_ids(corpus, threads);
  r.genders = assign_genders(corpus, r.authorship, names, options.gender, threads);
  r.coverage = gender_coverage_report(corpus, r.authorship, r.genders);
  r.table1 = paper_centered_summary(corpus, r.genders);
  r.table2 = author_centered_summary(corpus, r.authorship, r.genders, names, options.gender);

  auto self_rate = [&](std::optional<Gender> g, const char* label) -> std::optional<double> {
    try {
      return self_citation_rate(corpus, r.authorship, r.genders, g, options.self_citation);
    } catch (const EmptyEdgeSet&) {
      r.warnings.push_back(std::string("self citation (") + label + "): no edges");
      return std::nullopt;
    }
  };
  r.self_citation.all = self_rate(std::nullopt, "all");
  r.self_citation.female = self_rate(Gender::Female, "female");
  r.self_citation.male = self_rate(Gender::Male, "male");

  r.distributions = author_distributions(r.authorship);
  try {
    r.author_corr = author_correlations(r.authorship);
  } catch (const Error& e) {
    r.warnings.push_back(std::string("author correlations: ") + e.what());
    r.correlations_insufficient = true;
  }
  r.links = link_averages(corpus, r.authorship);

  const PaperSet all = PaperSet::all(corpus);
  const PaperSet gendered = r.genders.gendered_papers();
  const CarrierIndex index_all = build_carrier_index(corpus, all, lexicon, options.text, threads);
  for (const auto& m : lexicon.memes()) {
    const PaperSet& c = index_all.carriers(m);
    MemeFrequency f;
    f.meme = m;
    f.count_all = c.count();
    f.count_gendered = c.intersect(gendered).count();
    if (!all.empty()) f.f_all = static_cast<double>(f.count_all) / static_cast<double>(all.count());
    if (!gendered.empty())
      f.f_gendered = static_cast<double>(f.count_gendered) / static_cast<double>(gendered.count());
    r.meme_frequencies.push_back(std::move(f));
  }
  std::stable_sort(r.meme_frequencies.begin(), r.meme_frequencies.end(),
                   [](const MemeFrequency& a, const MemeFrequency& b) {
                     return a.count_all != b.count_all ? a.count_all > b.count_all : a.meme < b.meme;
                   });

  if (gendered.empty()) {
    r.warnings.push_back("no gendered papers; meme selection skipped");
  } else {
    const CarrierIndex index_g =
        build_carrier_index(corpus, gendered, lexicon, options.text, threads);
    r.selected_memes = select_memes_above(index_g, options.meme_threshold);
  }
  if (r.selected_memes.empty()) {
    r.warnings.push_back("no meme exceeds the selection threshold; score table is empty");
    return r;
  }

  r.score_table = gendered_score_table(corpus, index_all, r.genders, r.selected_memes,
                                       options.universe_mode, threads);
  auto corr = [&](ScoreSeries s, const char* label) -> std::optional<CorrelationResult> {
    try {
      return frequency_propagation_correlation(r.score_table, s);
    } catch (const Error& e) {
      r.warnings.push_back(std::string("frequency/propagation correlation (") + label + "): " + e.what());
      return std::nullopt;
    }
  };
  r.corr_g = corr(ScoreSeries::Gendered, "g");
  r.corr_F = corr(ScoreSeries::Female, "F");
  r.corr_M = corr(ScoreSeries::Male, "M");
  if (!r.corr_g) r.correlations_insufficient = true;
  return r;
}

}  // namespace hepmeme
