#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hepmeme/errors.hpp"
#include "hepmeme/propagation.hpp"
#include "propagation_oracle.hpp"

namespace hepmeme {
namespace {

constexpr CitedFilter kFilters[] = {CitedFilter::All, CitedFilter::GenderedBoth,
                                    CitedFilter::CitedFemale, CitedFilter::CitedMale};

PropagationCounts counts_of(const oracle::Instance& inst, CitedFilter f,
                            UniverseMode mode = UniverseMode::Shared) {
  const Corpus c = oracle::to_corpus(inst);
  const auto idx = build_carrier_index(c, PaperSet::all(c),
                                       MemeLexicon({std::string(oracle::kOracleMeme)}));
  return propagation_counts(c, idx, oracle::kOracleMeme, f, inst.gender, mode);
}

oracle::Instance instance(std::size_t n, std::vector<std::pair<std::uint32_t, std::uint32_t>> e,
                          std::vector<bool> carrier) {
  oracle::Instance inst;
  inst.n_papers = n;
  inst.edges = std::move(e);
  inst.carrier = std::move(carrier);
  inst.gender.assign(n, Gender::Unknown);
  return inst;
}

TEST(PropagationCounts, FourPaperExample) {
  // A=0 B=1 C=2 D=3; A->B, C->B, D->C; carriers {A,B}
  const auto inst = instance(4, {{0, 1}, {2, 1}, {3, 2}}, {true, true, false, false});
  const PropagationCounts c = counts_of(inst, CitedFilter::All);
  EXPECT_EQ(c, (PropagationCounts{1, 2, 1, 2}));
  const PropagationScore s = propagation_score(c);
  ASSERT_TRUE(s.finite());
  EXPECT_DOUBLE_EQ(s.value, 1.0);
}

TEST(PropagationCounts, NoCarriers) {
  const auto inst = instance(3, {{0, 1}, {1, 2}}, {false, false, false});
  EXPECT_EQ(counts_of(inst, CitedFilter::All), (PropagationCounts{0, 0, 0, 3}));
}

TEST(PropagationCounts, CompleteChainOfCarriers) {
  for (std::size_t n : {2u, 3u, 10u}) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
    for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    const auto c = counts_of(instance(n, e, std::vector<bool>(n, true)), CitedFilter::All);
    EXPECT_EQ(c.d_mm, n - 1);
    EXPECT_EQ(c.d_mn, 1u);
  }
}

TEST(PropagationCounts, UnknownMemeThrows) {
  const auto inst = instance(2, {{0, 1}}, {true, false});
  const Corpus c = oracle::to_corpus(inst);
  const auto idx = build_carrier_index(c, PaperSet::all(c), MemeLexicon({"meme"}));
  EXPECT_THROW(propagation_counts(c, idx, "other", CitedFilter::All, {}), UnknownMeme);
}

TEST(PropagationScore, Cases) {
  EXPECT_DOUBLE_EQ(propagation_score({0, 2, 1, 2}).value, 0.0);
  EXPECT_TRUE(propagation_score({0, 2, 1, 2}).finite());
  EXPECT_EQ(propagation_score({0, 0, 1, 3}).kind, PropagationScore::Kind::Undefined);
  EXPECT_EQ(propagation_score({1, 3, 0, 0}).kind, PropagationScore::Kind::Undefined);
  EXPECT_EQ(propagation_score({0, 3, 0, 2}).kind, PropagationScore::Kind::Undefined);
  EXPECT_EQ(propagation_score({2, 3, 0, 2}).kind, PropagationScore::Kind::Infinite);
  EXPECT_DOUBLE_EQ(propagation_score({2, 4, 1, 1}).value, 0.5);
}

TEST(FormatScore, Markers) {
  EXPECT_EQ(format_score({PropagationScore::Kind::Finite, 1.0}), "1.000000");
  EXPECT_EQ(format_score({PropagationScore::Kind::Finite, 2.0 / 3.0}), "0.666667");
  EXPECT_EQ(format_score({PropagationScore::Kind::Undefined, 0}), "NA");
  EXPECT_EQ(format_score({PropagationScore::Kind::Infinite, 0}), "INF");
}

TEST(OracleProperty, RandomInstancesMatchBruteForce) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = oracle::random_instance(rng, 50, 200);
    for (auto mode : {UniverseMode::Shared, UniverseMode::CitingOnly})
      for (auto f : kFilters) {
        const auto got = counts_of(inst, f, mode);
        const auto want = oracle::brute_force_counts(inst, f, mode);
        ASSERT_EQ(got, want) << "trial " << trial << " filter " << to_string(f) << "\n"
                             << oracle::to_json(inst);
      }
  }
}

TEST(OracleProperty, CountIdentities) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(rng, 50, 200);
    std::size_t carriers = 0;
    for (bool b : inst.carrier) carriers += b;
    for (auto f : kFilters) {
      std::size_t universe = 0, carriers_in_u = 0;
      for (std::size_t p = 0; p < inst.n_papers; ++p)
        if (paper_eligible(f, inst.gender[p])) {
          ++universe;
          carriers_in_u += inst.carrier[p];
        }
      const auto c = counts_of(inst, f);
      EXPECT_EQ(c.d_to_m + c.d_not_m, universe);
      EXPECT_EQ(c.d_mm + c.d_mn, carriers_in_u);
      EXPECT_LE(c.d_mm, c.d_to_m);
      if (f == CitedFilter::All) EXPECT_EQ(carriers_in_u, carriers);
    }
  }
}

TEST(OracleProperty, CitedGenderFiltersPartitionGenderedEdges) {
  const Gender all_genders[] = {Gender::Female, Gender::Male, Gender::Unknown};
  for (Gender a : all_genders)
    for (Gender b : all_genders) {
      const bool f = edge_passes(CitedFilter::CitedFemale, a, b);
      const bool m = edge_passes(CitedFilter::CitedMale, a, b);
      EXPECT_FALSE(f && m);
      EXPECT_EQ(f || m, edge_passes(CitedFilter::GenderedBoth, a, b));
      EXPECT_TRUE(edge_passes(CitedFilter::All, a, b));
    }
}

TEST(OracleProperty, DuplicationLeavesScoresUnchanged) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(rng, 25, 100);
    const auto twice = oracle::duplicated(inst);
    for (auto f : kFilters) {
      const auto a = counts_of(inst, f);
      const auto b = counts_of(twice, f);
      EXPECT_EQ(b.d_mm, 2 * a.d_mm);
      EXPECT_EQ(b.d_not_m, 2 * a.d_not_m);
      const auto sa = propagation_score(a), sb = propagation_score(b);
      ASSERT_EQ(sa.kind, sb.kind);
      if (sa.finite()) EXPECT_NEAR(sa.value, sb.value, 1e-12);
    }
  }
}

ScoreRow row(double f, double p) {
  ScoreRow r;
  r.f_g = f;
  r.P_g = {PropagationScore::Kind::Finite, p};
  return r;
}

TEST(FrequencyPropagationCorrelation, PerfectAnticorrelation) {
  std::vector<ScoreRow> t{row(0.1, 3.0), row(0.2, 2.0), row(0.3, 1.0)};
  ScoreRow undefined;
  undefined.f_g = 0.5;
  t.push_back(undefined);
  const auto r = frequency_propagation_correlation(t, ScoreSeries::Gendered);
  EXPECT_NEAR(r.r, -1.0, 1e-12);
  EXPECT_EQ(r.used, 3u);
  EXPECT_EQ(r.skipped, 1u);
}

TEST(FrequencyPropagationCorrelation, Errors) {
  const std::vector<ScoreRow> flat{row(0.1, 1.0), row(0.2, 1.0), row(0.3, 1.0)};
  EXPECT_THROW(frequency_propagation_correlation(flat, ScoreSeries::Gendered),
               DegenerateVariance);
  const std::vector<ScoreRow> one{row(0.1, 1.0)};
  EXPECT_THROW(frequency_propagation_correlation(one, ScoreSeries::Gendered), InsufficientData);
  EXPECT_THROW(frequency_propagation_correlation(one, ScoreSeries::Female), InsufficientData);
}

TEST(GenderedScoreTable, SingleGenderedLink) {
  oracle::Instance inst = instance(3, {{0, 1}, {1, 2}}, {true, false, false});
  inst.gender = {Gender::Female, Gender::Male, Gender::Unknown};
  const Corpus c = oracle::to_corpus(inst);
  const auto idx = build_carrier_index(c, PaperSet::all(c), MemeLexicon({"meme"}));
  GenderAssignment g;
  g.paper = inst.gender;
  const std::vector<std::string> memes{"meme"};
  const auto table = gendered_score_table(c, idx, g, memes);
  ASSERT_EQ(table.size(), 1u);
  const ScoreRow& r = table[0];
  EXPECT_DOUBLE_EQ(*r.f_g, 0.5);
  EXPECT_DOUBLE_EQ(*r.f_F, 1.0);
  EXPECT_DOUBLE_EQ(*r.f_M, 0.0);
  // the only gendered link points away from the carrier
  EXPECT_EQ(r.counts_g, (PropagationCounts{0, 0, 1, 2}));
  EXPECT_EQ(r.P_g.kind, PropagationScore::Kind::Undefined);
  EXPECT_EQ(r.P_F.kind, PropagationScore::Kind::Undefined);
  EXPECT_EQ(r.P_M.kind, PropagationScore::Kind::Undefined);

  const std::string tsv = score_table_tsv(table);
  EXPECT_EQ(tsv,
            "meme\tf_g\tf_F\tf_M\td_mm\td_to_m\td_mn\td_not_m\tP_g\tP_F\tP_M\n"
            "meme\t0.500000\t1.000000\t0.000000\t0\t0\t1\t2\tNA\tNA\tNA\n");
}

TEST(GenderedScoreTable, ThreadIndependent) {
  std::mt19937_64 rng(5);
  const auto inst = oracle::random_instance(rng, 50, 200);
  const Corpus c = oracle::to_corpus(inst);
  const auto idx = build_carrier_index(c, PaperSet::all(c), MemeLexicon({"meme", "some"}));
  GenderAssignment g;
  g.paper = inst.gender;
  const std::vector<std::string> memes{"meme", "some"};
  EXPECT_EQ(score_table_tsv(gendered_score_table(c, idx, g, memes, UniverseMode::Shared, 1)),
            score_table_tsv(gendered_score_table(c, idx, g, memes, UniverseMode::Shared, 3)));
}

}  // namespace
}  // namespace hepmeme
