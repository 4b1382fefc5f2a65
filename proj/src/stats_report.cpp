#include "hepmeme/stats_report.hpp"

#include <algorithm>
#include <set>

#include "hepmeme/errors.hpp"
#include "hepmeme/statistics.hpp"

namespace hepmeme {

Table1 paper_centered_summary(const Corpus& corpus, const GenderAssignment& genders) {
  Table1 t;
  const PaperSet all = PaperSet::all(corpus);
  const PaperSet gendered = genders.gendered_papers();
  t.all = {corpus.size(), corpus.graph().edge_count(), citing_cited_summary(corpus, all)};
  t.gendered = {gendered.count(), edges_within(corpus, gendered),
                citing_cited_summary(corpus, gendered)};
  return t;
}

Table2 author_centered_summary(const Corpus& corpus, const Authorship& authorship,
                               const GenderAssignment& genders, const NameGenderTable& table,
                               const GenderConfig& cfg) {
  Table2 t;
  auto tally = [](GenderSplit& s, Gender g) {
    ++s.all;
    (g == Gender::Female ? s.female : g == Gender::Male ? s.male : s.missing) += 1;
  };
  for (Gender g : genders.author) tally(t.first_authors, g);

  std::set<std::string> seen;
  for (const auto& authors : authorship.paper_authors) {
    if (authors.size() < 2) continue;
    const AuthorName& second = authors[1];
    if (seen.insert(second.normalized_full).second)
      tally(t.second_authors, classify_given_name(second.given, table, cfg));
  }

  const GenderCoverage c = gender_coverage_report(corpus, authorship, genders);
  t.pct_female_citing = c.pct_female_citing;
  t.pct_male_citing = c.pct_male_citing;
  t.pct_female_cited = c.pct_female_cited;
  t.pct_male_cited = c.pct_male_cited;
  return t;
}

double self_citation_rate(const Corpus& corpus, const Authorship& authorship,
                          const GenderAssignment& genders, std::optional<Gender> citing_gender,
                          SelfCitationMode mode) {
  auto shares_author = [&](std::size_t a, std::size_t b) {
    if (mode == SelfCitationMode::FirstAuthor) {
      const auto& fa = authorship.first_author[a];
      const auto& fb = authorship.first_author[b];
      return fa && fb && *fa == *fb;
    }
    for (const auto& x : authorship.paper_authors[a])
      for (const auto& y : authorship.paper_authors[b])
        if (x.normalized_full == y.normalized_full) return true;
    return false;
  };

  std::size_t total = 0, self = 0;
  for (auto [from, to] : corpus.graph().edges()) {
    if (citing_gender && genders.paper[from] != *citing_gender) continue;
    ++total;
    self += shares_author(from, to);
  }
  if (total == 0) throw EmptyEdgeSet("no citation edges to measure self citation on");
  return static_cast<double>(self) / static_cast<double>(total);
}

AuthorSeries author_distributions(const Authorship& authorship) {
  AuthorSeries s;
  for (const auto& a : authorship.authors) {
    s.author_id.push_back(a.author_id);
    s.n_papers.push_back(a.papers_first_authored.size());
    s.citations_made.push_back(a.citations_made);
    s.citations_received.push_back(a.citations_received);
  }
  return s;
}

AuthorCorrelations author_correlations(const Authorship& authorship) {
  std::vector<double> papers, made, received;
  for (const auto& a : authorship.authors) {
    papers.push_back(static_cast<double>(a.papers_first_authored.size()));
    made.push_back(static_cast<double>(a.citations_made));
    received.push_back(static_cast<double>(a.citations_received));
  }
  return {stats::pearson(papers, made), stats::pearson(papers, received),
          stats::pearson(made, received)};
}

LinkAverages link_averages(const Corpus& corpus, const Authorship& authorship) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
  for (auto [from, to] : corpus.graph().edges()) {
    const auto& fa = authorship.first_author[from];
    const auto& ta = authorship.first_author[to];
    if (fa && ta && *fa != *ta) links.emplace_back(*fa, *ta);
  }
  std::sort(links.begin(), links.end());
  links.erase(std::unique(links.begin(), links.end()), links.end());

  std::vector<std::size_t> in(authorship.authors.size(), 0), out(authorship.authors.size(), 0);
  for (auto [a, b] : links) {
    ++out[a];
    ++in[b];
  }
  LinkAverages r;
  r.author_links = links.size();
  r.citing_authors = static_cast<std::size_t>(std::count_if(out.begin(), out.end(), [](auto d) { return d > 0; }));
  r.cited_authors = static_cast<std::size_t>(std::count_if(in.begin(), in.end(), [](auto d) { return d > 0; }));
  if (r.cited_authors > 0)
    r.mean_in_links = static_cast<double>(links.size()) / static_cast<double>(r.cited_authors);
  if (r.citing_authors > 0)
    r.mean_out_links = static_cast<double>(links.size()) / static_cast<double>(r.citing_authors);
  if (!in.empty()) {
    r.max_in_links = *std::max_element(in.begin(), in.end());
    r.max_out_links = *std::max_element(out.begin(), out.end());
  }
  return r;
}

}  // namespace hepmeme
