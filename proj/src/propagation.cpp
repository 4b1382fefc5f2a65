#include "hepmeme/propagation.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "hepmeme/errors.hpp"
#include "hepmeme/parallel.hpp"
#include "hepmeme/statistics.hpp"

namespace hepmeme {

std::string_view to_string(CitedFilter f) {
  switch (f) {
    case CitedFilter::All: return "all";
    case CitedFilter::GenderedBoth: return "gendered";
    case CitedFilter::CitedFemale: return "cited_female";
    case CitedFilter::CitedMale: return "cited_male";
  }
  return "all";
}

bool paper_eligible(CitedFilter filter, Gender paper) {
  return filter == CitedFilter::All || paper != Gender::Unknown;
}

bool edge_passes(CitedFilter filter, Gender citing, Gender cited) {
  switch (filter) {
    case CitedFilter::All: return true;
    case CitedFilter::GenderedBoth: return citing != Gender::Unknown && cited != Gender::Unknown;
    case CitedFilter::CitedFemale: return citing != Gender::Unknown && cited == Gender::Female;
    case CitedFilter::CitedMale: return citing != Gender::Unknown && cited == Gender::Male;
  }
  return false;
}

PropagationCounts propagation_counts(const Corpus& corpus, const CarrierIndex& index,
                                     std::string_view meme, CitedFilter filter,
                                     std::span<const Gender> paper_genders, UniverseMode mode) {
  const PaperSet& carriers = index.carriers(meme);
  if (carriers.corpus_size() != corpus.size())
    throw std::invalid_argument("carrier index does not belong to this corpus");
  if (filter != CitedFilter::All && paper_genders.size() != corpus.size())
    throw std::invalid_argument("gendered filter requires one label per paper");
  auto gender = [&](std::size_t p) {
    return paper_genders.empty() ? Gender::Unknown : paper_genders[p];
  };

  const auto& g = corpus.graph();
  PropagationCounts c;
  std::uint64_t universe = 0, carriers_in_universe = 0;
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    const Gender gp = gender(p);
    if (!paper_eligible(filter, gp)) continue;
    bool has_edge = false, cites_carrier = false;
    for (std::uint32_t q : g.cites(p)) {
      if (!edge_passes(filter, gp, gender(q))) continue;
      has_edge = true;
      if (carriers.contains(q)) {
        cites_carrier = true;
        break;
      }
    }
    if (mode == UniverseMode::CitingOnly && !has_edge) continue;
    const bool carrier = carriers.contains(p);
    ++universe;
    carriers_in_universe += carrier;
    if (cites_carrier) {
      ++c.d_to_m;
      c.d_mm += carrier;
    }
  }
  c.d_not_m = universe - c.d_to_m;
  c.d_mn = carriers_in_universe - c.d_mm;
  return c;
}

PropagationScore propagation_score(const PropagationCounts& c) {
  using Kind = PropagationScore::Kind;
  if (c.d_to_m == 0 || c.d_not_m == 0 || (c.d_mn == 0 && c.d_mm == 0)) return {Kind::Undefined, 0};
  if (c.d_mn == 0) return {Kind::Infinite, 0};
  const double cites = static_cast<double>(c.d_mm) / static_cast<double>(c.d_to_m);
  const double not_cites = static_cast<double>(c.d_mn) / static_cast<double>(c.d_not_m);
  return {Kind::Finite, cites / not_cites};
}

std::vector<ScoreRow> gendered_score_table(const Corpus& corpus, const CarrierIndex& index,
                                           const GenderAssignment& genders,
                                           std::span<const std::string> memes, UniverseMode mode,
                                           unsigned threads) {
  const PaperSet gendered = genders.gendered_papers();
  const PaperSet female = genders.papers_of(Gender::Female);
  const PaperSet male = genders.papers_of(Gender::Male);
  auto freq = [](const PaperSet& carriers, const PaperSet& universe) -> std::optional<double> {
    if (universe.empty()) return std::nullopt;
    return static_cast<double>(carriers.intersect(universe).count()) /
           static_cast<double>(universe.count());
  };
  for (const auto& m : memes)
    if (!index.contains(m)) throw UnknownMeme(m);

  return parallel_map<ScoreRow>(memes.size(), threads, [&](std::size_t i) {
    const std::string& m = memes[i];
    const PaperSet& carriers = index.carriers(m);
    ScoreRow row;
    row.meme = m;
    row.f_g = freq(carriers, gendered);
    row.f_F = freq(carriers, female);
    row.f_M = freq(carriers, male);
    row.counts_g = propagation_counts(corpus, index, m, CitedFilter::GenderedBoth, genders.paper, mode);
    row.counts_F = propagation_counts(corpus, index, m, CitedFilter::CitedFemale, genders.paper, mode);
    row.counts_M = propagation_counts(corpus, index, m, CitedFilter::CitedMale, genders.paper, mode);
    row.P_g = propagation_score(row.counts_g);
    row.P_F = propagation_score(row.counts_F);
    row.P_M = propagation_score(row.counts_M);
    return row;
  });
}

CorrelationResult frequency_propagation_correlation(std::span<const ScoreRow> table,
                                                    ScoreSeries which) {
  std::vector<double> f, p;
  CorrelationResult result;
  for (const auto& row : table) {
    const auto& freq = which == ScoreSeries::Gendered ? row.f_g
                       : which == ScoreSeries::Female ? row.f_F
                                                      : row.f_M;
    const auto& score = which == ScoreSeries::Gendered ? row.P_g
                        : which == ScoreSeries::Female ? row.P_F
                                                       : row.P_M;
    if (!freq || !score.finite()) {
      ++result.skipped;
      continue;
    }
    f.push_back(*freq);
    p.push_back(score.value);
  }
  if (f.size() < 2)
    throw InsufficientData("need at least two memes with finite scores, have " +
                           std::to_string(f.size()));
  result.r = stats::pearson(f, p);
  result.used = f.size();
  return result;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : "NA"; }

}  // namespace

std::string format_score(const PropagationScore& s) {
  switch (s.kind) {
    case PropagationScore::Kind::Finite: return fixed6(s.value);
    case PropagationScore::Kind::Infinite: return "INF";
    case PropagationScore::Kind::Undefined: return "NA";
  }
  return "NA";
}

std::string score_table_tsv(std::span<const ScoreRow> table) {
  std::ostringstream out;
  out << "meme\tf_g\tf_F\tf_M\td_mm\td_to_m\td_mn\td_not_m\tP_g\tP_F\tP_M\n";
  for (const auto& r : table) {
    out << r.meme << '\t' << fixed6(r.f_g) << '\t' << fixed6(r.f_F) << '\t' << fixed6(r.f_M)
        << '\t' << r.counts_g.d_mm << '\t' << r.counts_g.d_to_m << '\t' << r.counts_g.d_mn
        << '\t' << r.counts_g.d_not_m << '\t' << format_score(r.P_g) << '\t'
        << format_score(r.P_F) << '\t' << format_score(r.P_M) << '\n';
  }
  return out.str();
}

}  // namespace hepmeme
