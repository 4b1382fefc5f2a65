#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hepmeme/corpus.hpp"
#include "hepmeme/gender.hpp"
#include "hepmeme/memes.hpp"

namespace hepmeme {

// Which citation edges count, by the gender of their endpoints.
//   All           every edge; universe = all papers
//   GenderedBoth  citing and cited gendered; universe = gendered papers
//   CitedFemale   citing gendered, cited Female; universe = gendered papers
//   CitedMale     citing gendered, cited Male; universe = gendered papers
enum class CitedFilter : std::uint8_t { All, GenderedBoth, CitedFemale, CitedMale };

std::string_view to_string(CitedFilter f);

// Shared: the citing universe is every eligible paper, so all gendered
// filters share a denominator population. CitingOnly keeps only papers
// with at least one edge that passes the filter.
enum class UniverseMode : std::uint8_t { Shared, CitingOnly };

bool edge_passes(CitedFilter filter, Gender citing, Gender cited);
bool paper_eligible(CitedFilter filter, Gender paper);

struct PropagationCounts {
  std::uint64_t d_mm = 0;     // carriers citing >= 1 carrier
  std::uint64_t d_to_m = 0;   // papers citing >= 1 carrier
  std::uint64_t d_mn = 0;     // carriers citing no carrier
  std::uint64_t d_not_m = 0;  // papers citing no carrier

  friend bool operator==(const PropagationCounts&, const PropagationCounts&) = default;
};

struct PropagationScore {
  enum class Kind : std::uint8_t { Finite, Undefined, Infinite };
  Kind kind = Kind::Undefined;
  double value = 0.0;  // meaningful only when kind == Finite

  bool finite() const { return kind == Kind::Finite; }
  friend bool operator==(const PropagationScore&, const PropagationScore&) = default;
};

// `paper_genders` may be empty when filter == All. Throws UnknownMeme.
PropagationCounts propagation_counts(const Corpus& corpus, const CarrierIndex& index,
                                     std::string_view meme, CitedFilter filter,
                                     std::span<const Gender> paper_genders,
                                     UniverseMode mode = UniverseMode::Shared);

PropagationScore propagation_score(const PropagationCounts& c);

struct ScoreRow {
  std::string meme;
  std::optional<double> f_g, f_F, f_M;  // empty when the universe is empty
  PropagationCounts counts_g, counts_F, counts_M;
  PropagationScore P_g, P_F, P_M;
};

// `index` must cover every paper the filters can reach (normally the
// full corpus).
std::vector<ScoreRow> gendered_score_table(const Corpus& corpus, const CarrierIndex& index,
                                           const GenderAssignment& genders,
                                           std::span<const std::string> memes,
                                           UniverseMode mode = UniverseMode::Shared,
                                           unsigned threads = 0);

enum class ScoreSeries : std::uint8_t { Gendered, Female, Male };

struct CorrelationResult {
  double r = 0.0;
  std::size_t used = 0;
  std::size_t skipped = 0;  // pairs whose score was Undefined or Infinite
};

// Pearson r over (f, P) pairs of the chosen series; non-finite scores are
// skipped. Throws InsufficientData or DegenerateVariance.
CorrelationResult frequency_propagation_correlation(std::span<const ScoreRow> table,
                                                    ScoreSeries which);

// Tab-separated, fixed 6 decimals, "NA"/"INF" markers.
std::string format_score(const PropagationScore& s);
std::string score_table_tsv(std::span<const ScoreRow> table);

}  // namespace hepmeme
