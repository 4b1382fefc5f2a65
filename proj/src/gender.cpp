#include "hepmeme/gender.hpp"

#include <charconv>
#include <set>

#include "hepmeme/byte_source.hpp"
#include "hepmeme/errors.hpp"
#include "hepmeme/parallel.hpp"
#include "hepmeme/text.hpp"

namespace hepmeme {
namespace {

std::vector<std::string_view> split_delimited(std::string_view line, char delim) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = line.find(delim, start);
    out.push_back(text::trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return !s.empty() && ec == std::errc{} && ptr == s.data() + s.size();
}

double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

}  // namespace

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Female: return "female";
    case Gender::Male: return "male";
    case Gender::Unknown: return "unknown";
  }
  return "unknown";
}

void NameGenderTable::add(std::string_view name, double proportion_female, std::uint64_t count) {
  std::string key = text::normalize_name(name);
  auto [it, inserted] = entries_.try_emplace(std::move(key), NameGenderEntry{proportion_female, count});
  if (inserted) return;
  auto& e = it->second;
  const double total = static_cast<double>(e.count) + static_cast<double>(count);
  e.proportion_female = (e.proportion_female * static_cast<double>(e.count) +
                         proportion_female * static_cast<double>(count)) /
                        total;
  e.count += count;
}

const NameGenderEntry* NameGenderTable::find(std::string_view name) const {
  auto it = entries_.find(text::normalize_name(name));
  return it == entries_.end() ? nullptr : &it->second;
}

NameGenderTable NameGenderTable::parse(std::string_view data) {
  NameGenderTable table;
  std::size_t start = 0;
  bool have_header = false;
  char delim = ',';
  std::size_t col_name = 0, col_prop = 0, col_count = 0, n_cols = 0;
  while (start < data.size()) {
    std::size_t nl = data.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? data.size() : nl;
    std::string_view line = text::trim(data.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;

    if (!have_header) {
      delim = line.find('\t') != std::string_view::npos ? '\t' : ',';
      auto cols = split_delimited(line, delim);
      bool found[3] = {false, false, false};
      for (std::size_t i = 0; i < cols.size(); ++i) {
        const std::string c = text::ascii_lower(cols[i]);
        if (c == "name") col_name = i, found[0] = true;
        if (c == "proportion_female") col_prop = i, found[1] = true;
        if (c == "count") col_count = i, found[2] = true;
      }
      if (!found[0] || !found[1] || !found[2])
        throw MalformedRecord("name table header must contain name, proportion_female, count");
      n_cols = cols.size();
      have_header = true;
      continue;
    }

    auto fields = split_delimited(line, delim);
    double prop = 0;
    std::uint64_t count = 0;
    if (fields.size() != n_cols || fields[col_name].empty() ||
        !parse_number(fields[col_prop], prop) || !(prop >= 0.0 && prop <= 1.0) ||
        !parse_number(fields[col_count], count) || count < 1 ||
        text::normalize_name(fields[col_name]).empty()) {
      ++table.malformed_rows_;
      continue;
    }
    table.add(fields[col_name], prop, count);
  }
  if (!have_header) throw MalformedRecord("name table has no header line");
  return table;
}

NameGenderTable NameGenderTable::load(const std::filesystem::path& path) {
  return parse(io::read_file(path));
}

void GenderConfig::validate() const {
  if (!(threshold > 0.5 && threshold <= 1.0))
    throw InvalidConfig("gender threshold must lie in (0.5, 1], got " + std::to_string(threshold));
}

Gender classify_given_name(std::string_view given, const NameGenderTable& table,
                           const GenderConfig& cfg) {
  const std::string key = text::normalize_name(given);
  if (key.empty() || key.find(' ') != std::string::npos || is_initial(key)) return Gender::Unknown;
  const NameGenderEntry* e = table.find(key);
  if (e == nullptr) {
    const auto hyphen = key.find('-');
    if (hyphen != std::string::npos && hyphen > 0) {
      std::string_view head(key.data(), hyphen);
      if (!is_initial(head)) e = table.find(head);
    }
  }
  if (e == nullptr || e->count < cfg.min_count) return Gender::Unknown;
  if (e->proportion_female >= cfg.threshold) return Gender::Female;
  if (e->proportion_female <= 1.0 - cfg.threshold) return Gender::Male;
  return Gender::Unknown;
}

Gender gender_of_paper(std::span<const AuthorName> authors, const NameGenderTable& table,
                       const GenderConfig& cfg) {
  if (authors.empty()) return Gender::Unknown;
  return classify_given_name(authors.front().given, table, cfg);
}

PaperSet GenderAssignment::gendered_papers() const {
  return PaperSet::where(paper.size(), [&](std::size_t i) { return paper[i] != Gender::Unknown; });
}

PaperSet GenderAssignment::papers_of(Gender g) const {
  return PaperSet::where(paper.size(), [&](std::size_t i) { return paper[i] == g; });
}

GenderAssignment assign_genders(const Corpus& corpus, const Authorship& authorship,
                                const NameGenderTable& table, const GenderConfig& cfg,
                                unsigned threads) {
  cfg.validate();
  GenderAssignment out;
  out.author = parallel_map<Gender>(authorship.authors.size(), threads, [&](std::size_t i) {
    return classify_given_name(authorship.authors[i].name.given, table, cfg);
  });
  out.paper.assign(corpus.size(), Gender::Unknown);
  for (std::size_t p = 0; p < corpus.size(); ++p)
    if (const auto& slot = authorship.first_author[p]) out.paper[p] = out.author[*slot];
  return out;
}

std::vector<CitationEdge> gendered_link_filter(const Corpus& corpus,
                                               const GenderAssignment& genders) {
  std::vector<CitationEdge> out;
  for (auto [from, to] : corpus.graph().edges())
    if (genders.paper[from] != Gender::Unknown && genders.paper[to] != Gender::Unknown)
      out.push_back({corpus.paper(from).id, corpus.paper(to).id});
  return out;
}

GenderCoverage gender_coverage_report(const Corpus& corpus, const Authorship& authorship,
                                      const GenderAssignment& genders) {
  GenderCoverage c;
  const std::size_t gendered_papers = genders.gendered_papers().count();
  std::set<std::uint32_t> gendered_authors, citing, cited;
  for (std::size_t p = 0; p < corpus.size(); ++p)
    if (genders.paper[p] != Gender::Unknown) gendered_authors.insert(*authorship.first_author[p]);

  std::size_t gendered_links = 0;
  for (auto [from, to] : corpus.graph().edges()) {
    if (genders.paper[from] == Gender::Unknown || genders.paper[to] == Gender::Unknown) continue;
    ++gendered_links;
    citing.insert(*authorship.first_author[from]);
    cited.insert(*authorship.first_author[to]);
  }
  auto split = [&](const std::set<std::uint32_t>& slots, double& female, double& male) {
    std::size_t f = 0, m = 0;
    for (auto s : slots) (genders.author[s] == Gender::Female ? f : m) += 1;
    female = percent(f, f + m);
    male = percent(m, f + m);
  };

  c.pct_gendered_papers = percent(gendered_papers, corpus.size());
  c.pct_gendered_links = percent(gendered_links, corpus.graph().edge_count());
  c.avg_papers_per_gendered_author =
      gendered_authors.empty()
          ? 0.0
          : static_cast<double>(gendered_papers) / static_cast<double>(gendered_authors.size());
  split(citing, c.pct_female_citing, c.pct_male_citing);
  split(cited, c.pct_female_cited, c.pct_male_cited);
  return c;
}

}  // namespace hepmeme
