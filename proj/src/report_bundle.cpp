#include "hepmeme/report_bundle.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hepmeme/errors.hpp"

namespace hepmeme {
namespace {

using nlohmann::ordered_json;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fixed6(const std::optional<double>& v) { return v ? fixed6(*v) : "NA"; }

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << body;
  if (!out.flush()) throw IoError("error writing '" + path.string() + "'");
}

std::string table1_tsv(const Table1& t) {
  std::ostringstream o;
  auto row = [&](const char* name, std::size_t a, std::size_t g) {
    o << name << '\t' << a << '\t' << g << '\n';
  };
  o << "metric\tall\twith_gender\n";
  row("papers", t.all.papers, t.gendered.papers);
  row("citations", t.all.citations, t.gendered.citations);
  row("citing_papers", t.all.citing_cited.n_citing, t.gendered.citing_cited.n_citing);
  row("cited_papers", t.all.citing_cited.n_cited, t.gendered.citing_cited.n_cited);
  row("citing_union_cited", t.all.citing_cited.n_union, t.gendered.citing_cited.n_union);
  row("citing_intersection_cited", t.all.citing_cited.n_intersection,
      t.gendered.citing_cited.n_intersection);
  return o.str();
}

std::string table2_tsv(const Table2& t) {
  std::ostringstream o;
  auto split = [&](const char* name, const GenderSplit& s) {
    o << name << '\t' << s.all << '\t' << s.female << '\t' << s.male << '\t' << s.missing << '\n';
  };
  o << "metric\tall\tfemale\tmale\tmissing\n";
  split("first_authors", t.first_authors);
  split("second_authors", t.second_authors);
  o << "pct_first_authors_citing\t100\t" << fixed6(t.pct_female_citing) << '\t'
    << fixed6(t.pct_male_citing) << "\tNA\n";
  o << "pct_first_authors_cited\t100\t" << fixed6(t.pct_female_cited) << '\t'
    << fixed6(t.pct_male_cited) << "\tNA\n";
  return o.str();
}

std::string self_citation_tsv(const SelfCitation& s) {
  std::ostringstream o;
  o << "group\trate\n";
  o << "all\t" << fixed6(s.all) << '\n';
  o << "female\t" << fixed6(s.female) << '\n';
  o << "male\t" << fixed6(s.male) << '\n';
  return o.str();
}

std::string distributions_tsv(const AnalysisResult& r) {
  std::ostringstream o;
  o << "author_id\tnormalized_full\tgiven\tn_papers\tcitations_made\tcitations_received\tgender\n";
  for (std::size_t i = 0; i < r.authorship.authors.size(); ++i) {
    const auto& a = r.authorship.authors[i];
    o << a.author_id << '\t' << a.name.normalized_full << '\t' << a.name.given << '\t'
      << a.papers_first_authored.size() << '\t' << a.citations_made << '\t'
      << a.citations_received << '\t' << to_string(r.genders.author[i]) << '\n';
  }
  return o.str();
}

std::string correlations_tsv(const AnalysisResult& r) {
  std::ostringstream o;
  o << "pair\tr\tn_used\tn_skipped\n";
  const std::size_t n_authors = r.authorship.authors.size();
  auto author_row = [&](const char* name, std::optional<double> v) {
    o << name << '\t' << fixed6(v) << '\t' << (v ? n_authors : 0) << "\t0\n";
  };
  const auto& ac = r.author_corr;
  author_row("papers_vs_citations_made", ac ? std::optional(ac->r_papers_made) : std::nullopt);
  author_row("papers_vs_citations_received",
             ac ? std::optional(ac->r_papers_received) : std::nullopt);
  author_row("citations_made_vs_received",
             ac ? std::optional(ac->r_made_received) : std::nullopt);
  auto meme_row = [&](const char* name, const std::optional<CorrelationResult>& c) {
    if (c)
      o << name << '\t' << fixed6(c->r) << '\t' << c->used << '\t' << c->skipped << '\n';
    else
      o << name << "\tNA\t0\t0\n";
  };
  meme_row("f_g_vs_P_g", r.corr_g);
  meme_row("f_F_vs_P_F", r.corr_F);
  meme_row("f_M_vs_P_M", r.corr_M);
  return o.str();
}

std::string link_averages_tsv(const LinkAverages& l) {
  std::ostringstream o;
  o << "metric\tvalue\n";
  o << "author_links\t" << l.author_links << '\n';
  o << "citing_authors\t" << l.citing_authors << '\n';
  o << "cited_authors\t" << l.cited_authors << '\n';
  o << "mean_in_links\t" << fixed6(l.mean_in_links) << '\n';
  o << "mean_out_links\t" << fixed6(l.mean_out_links) << '\n';
  o << "max_in_links\t" << l.max_in_links << '\n';
  o << "max_out_links\t" << l.max_out_links << '\n';
  return o.str();
}

std::string meme_frequencies_tsv(const AnalysisResult& r) {
  std::ostringstream o;
  o << "rank\tmeme\tcount\trelative_frequency\tcount_gendered\trelative_frequency_gendered\n";
  std::size_t rank = 0;
  for (const auto& f : r.meme_frequencies)
    o << ++rank << '\t' << f.meme << '\t' << f.count_all << '\t' << fixed6(f.f_all) << '\t'
      << f.count_gendered << '\t' << fixed6(f.f_gendered) << '\n';
  return o.str();
}

ordered_json opt(const std::optional<double>& v) { return v ? ordered_json(*v) : ordered_json(); }

ordered_json score_json(const PropagationScore& s) {
  if (s.finite()) return s.value;
  return s.kind == PropagationScore::Kind::Infinite ? "INF" : "NA";
}

}  // namespace

std::string summary_json(const AnalysisResult& r) {
  const auto& t1 = r.table1;
  const auto& t2 = r.table2;
  auto cc = [](const PaperCentered& p) {
    return ordered_json{{"papers", p.papers},
                        {"citations", p.citations},
                        {"citing", p.citing_cited.n_citing},
                        {"cited", p.citing_cited.n_cited},
                        {"union", p.citing_cited.n_union},
                        {"intersection", p.citing_cited.n_intersection}};
  };
  auto split = [](const GenderSplit& s) {
    return ordered_json{{"all", s.all}, {"female", s.female}, {"male", s.male}, {"missing", s.missing}};
  };
  auto corr = [](const std::optional<CorrelationResult>& c) {
    if (!c) return ordered_json();
    return ordered_json{{"r", c->r}, {"used", c->used}, {"skipped", c->skipped}};
  };
  ordered_json scores = ordered_json::array();
  for (const auto& row : r.score_table)
    scores.push_back({{"meme", row.meme},
                      {"f_g", opt(row.f_g)},
                      {"f_F", opt(row.f_F)},
                      {"f_M", opt(row.f_M)},
                      {"P_g", score_json(row.P_g)},
                      {"P_F", score_json(row.P_F)},
                      {"P_M", score_json(row.P_M)}});
  ordered_json j = {
      {"table1", {{"all", cc(t1.all)}, {"with_gender", cc(t1.gendered)}}},
      {"table2",
       {{"first_authors", split(t2.first_authors)},
        {"second_authors", split(t2.second_authors)},
        {"pct_female_citing", t2.pct_female_citing},
        {"pct_female_cited", t2.pct_female_cited}}},
      {"coverage",
       {{"pct_gendered_papers", r.coverage.pct_gendered_papers},
        {"pct_gendered_links", r.coverage.pct_gendered_links},
        {"avg_papers_per_gendered_author", r.coverage.avg_papers_per_gendered_author}}},
      {"self_citation",
       {{"all", opt(r.self_citation.all)},
        {"female", opt(r.self_citation.female)},
        {"male", opt(r.self_citation.male)}}},
      {"author_correlations",
       r.author_corr ? ordered_json{{"papers_made", r.author_corr->r_papers_made},
                                    {"papers_received", r.author_corr->r_papers_received},
                                    {"made_received", r.author_corr->r_made_received}}
                     : ordered_json()},
      {"link_averages",
       {{"mean_in_links", r.links.mean_in_links}, {"mean_out_links", r.links.mean_out_links}}},
      {"selected_memes", r.selected_memes},
      {"scores", scores},
      {"frequency_propagation_correlation",
       {{"g", corr(r.corr_g)}, {"F", corr(r.corr_F)}, {"M", corr(r.corr_M)}}},
      {"correlations_insufficient", r.correlations_insufficient},
      {"warnings", r.warnings},
  };
  return j.dump(2) + "\n";
}

std::string summary_text(const AnalysisResult& r) {
  std::ostringstream o;
  char buf[256];
  const auto& t1 = r.table1;
  std::snprintf(buf, sizeof buf, "papers %zu (gendered %zu, %.1f%%)   citations %zu (gendered links %zu, %.1f%%)\n",
                t1.all.papers, t1.gendered.papers, r.coverage.pct_gendered_papers, t1.all.citations,
                t1.gendered.citations, r.coverage.pct_gendered_links);
  o << buf;
  const auto& fa = r.table2.first_authors;
  std::snprintf(buf, sizeof buf, "first authors %zu: %zu female, %zu male, %zu missing; %.2f papers per gendered author\n",
                fa.all, fa.female, fa.male, fa.missing, r.coverage.avg_papers_per_gendered_author);
  o << buf;
  std::snprintf(buf, sizeof buf, "female share: citing %.1f%%, cited %.1f%%\n",
                r.table2.pct_female_citing, r.table2.pct_female_cited);
  o << buf;
  o << "self citations: all " << fixed6(r.self_citation.all) << ", female "
    << fixed6(r.self_citation.female) << ", male " << fixed6(r.self_citation.male) << '\n';
  if (r.author_corr) {
    std::snprintf(buf, sizeof buf, "author correlations: papers/made %.3f, papers/received %.3f, made/received %.3f\n",
                  r.author_corr->r_papers_made, r.author_corr->r_papers_received,
                  r.author_corr->r_made_received);
    o << buf;
  }
  std::snprintf(buf, sizeof buf, "author links: mean in %.2f, mean out %.2f\n", r.links.mean_in_links,
                r.links.mean_out_links);
  o << buf;
  o << "selected memes: " << r.selected_memes.size() << '\n';
  if (!r.score_table.empty()) {
    std::snprintf(buf, sizeof buf, "  %-16s %9s %9s %9s %9s %9s %9s\n", "meme", "f_g", "f_F", "f_M",
                  "P_g", "P_F", "P_M");
    o << buf;
    for (const auto& row : r.score_table) {
      std::snprintf(buf, sizeof buf, "  %-16s %9.4s %9.4s %9.4s %9s %9s %9s\n", row.meme.c_str(),
                    fixed6(row.f_g).c_str(), fixed6(row.f_F).c_str(), fixed6(row.f_M).c_str(),
                    format_score(row.P_g).substr(0, 8).c_str(),
                    format_score(row.P_F).substr(0, 8).c_str(),
                    format_score(row.P_M).substr(0, 8).c_str());
      o << buf;
    }
  }
  if (r.corr_g) {
    std::snprintf(buf, sizeof buf, "r(f_g, P_g) = %.3f over %zu memes (%zu skipped)\n", r.corr_g->r,
                  r.corr_g->used, r.corr_g->skipped);
    o << buf;
  }
  for (const auto& w : r.warnings) o << "warning: " << w << '\n';
  return o.str();
}

void write_report_bundle(const std::filesystem::path& dir, const AnalysisResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
  write_text(dir / "table1.tsv", table1_tsv(r.table1));
  write_text(dir / "table2.tsv", table2_tsv(r.table2));
  write_text(dir / "self_citation.tsv", self_citation_tsv(r.self_citation));
  write_text(dir / "distributions.tsv", distributions_tsv(r));
  write_text(dir / "correlations.tsv", correlations_tsv(r));
  write_text(dir / "link_averages.tsv", link_averages_tsv(r.links));
  write_text(dir / "meme_frequencies.tsv", meme_frequencies_tsv(r));
  write_text(dir / "score_table.tsv", score_table_tsv(r.score_table));
  write_text(dir / "summary.json", summary_json(r));
}

}  // namespace hepmeme
