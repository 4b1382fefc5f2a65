// Acceptance criteria measured on the public SNAP hep-th data. Needs
//   HEPMEME_ABSTRACTS  cit-HepTh-abstracts directory or tarball
//   HEPMEME_EDGES      cit-HepTh edge list
//   HEPMEME_NAMES      name,proportion_female,count table
// and exits 77 (skipped) when any of them is unset.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

#include "checklist.hpp"
#include "hepmeme/pipeline.hpp"

using namespace hepmeme;

namespace {

std::string fmt(double v, int digits = 3) {
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(digits);
  o << v;
  return o.str();
}

bool within_rel(double got, double want, double rel) {
  return std::abs(got - want) <= rel * want;
}

bool within_abs(double got, double want, double tol) { return std::abs(got - want) <= tol; }

std::string vs(double got, double want, int digits = 0) {
  return fmt(got, digits) + " vs " + fmt(want, digits);
}

const std::vector<std::pair<std::string, double>> kTable3 = {
    {"space", 9249},        {"gauge", 8082},         {"string", 7517},
    {"quantum", 6275},      {"symmetry", 5682},      {"brane", 5153},
    {"mass", 5082},         {"gravity", 4621},       {"group", 4600},
    {"conformal", 3389},    {"potential", 3331},     {"spin", 2604},
    {"hole", 2395},         {"supersymmetry", 2220}, {"supergravity", 2118},
    {"topological", 2079},  {"phase", 2068},         {"abelian", 2034},
    {"magnetic", 1983},     {"manifold", 1967},      {"matter", 1829},
    {"spacetime", 1812},    {"vacuum", 1802},        {"coupled", 1795},
    {"tensor", 1763},       {"massless", 1654},      {"renormalization", 1418},
    {"cosmological", 1393}, {"gravitational", 1362}, {"bosonic", 1352},
    {"chern", 1277},        {"temperature", 1172},   {"lattice", 1033},
    {"discrete", 1023},     {"fermionic", 981},      {"relativistic", 932},
    {"superconformal", 752}, {"singularity", 727},   {"cohomology", 465},
    {"hierarchy", 464}};

}  // namespace

int main() {
  const char* abstracts = std::getenv("HEPMEME_ABSTRACTS");
  const char* edges_path = std::getenv("HEPMEME_EDGES");
  const char* names_path = std::getenv("HEPMEME_NAMES");
  if (!abstracts || !edges_path || !names_path) {
    std::cout << "SKIP  criteria 1-8 need HEPMEME_ABSTRACTS, HEPMEME_EDGES and HEPMEME_NAMES\n";
    return 77;
  }

  ParsedArchive parsed = parse_abstract_archive(abstracts);
  EdgeList edges = parse_edge_list(edges_path);
  parsed.report.edge_lines_malformed = edges.malformed_lines;
  const Corpus corpus = build_corpus(std::move(parsed.records), edges.edges, parsed.report);
  const NameGenderTable names = NameGenderTable::load(names_path);
  const MemeLexicon lexicon = MemeLexicon::load(std::string(HEPMEME_DATA_DIR) + "/memes.txt");

  const auto start = std::chrono::steady_clock::now();
  const AnalysisResult r = run_analysis(corpus, names, lexicon, AnalysisOptions{});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << "note  analysis took " << fmt(seconds, 1) << " s after ingest\n";

  Checklist list;

  {
    const auto& rep = corpus.report();
    const auto& cc = r.table1.all.citing_cited;
    const bool ok = corpus.size() == 29555 && cc.n_citing == 25058 && cc.n_cited == 23180 &&
                    cc.n_union == 27770 && cc.n_intersection == 20468 &&
                    rep.edges_read == 352807 && rep.edges_reconcile();
    list.record(1, "corpus counts (exact)", ok,
                "papers " + std::to_string(corpus.size()) + ", citing " +
                    std::to_string(cc.n_citing) + ", cited " + std::to_string(cc.n_cited) +
                    ", union " + std::to_string(cc.n_union) + ", intersection " +
                    std::to_string(cc.n_intersection) + ", edges read " +
                    std::to_string(rep.edges_read) + " = retained " +
                    std::to_string(rep.edges_retained) + " + unknown " +
                    std::to_string(rep.dropped_unknown_endpoint) + " + self " +
                    std::to_string(rep.dropped_self_loop) + " + duplicate " +
                    std::to_string(rep.duplicate_edges));
  }

  {
    const auto& g = r.table1.gendered;
    const auto& fa = r.table2.first_authors;
    const bool ok = within_rel(g.papers, 20657, 0.05) && within_rel(g.citations, 206405, 0.05) &&
                    within_rel(fa.female, 1079, 0.05) && within_rel(fa.male, 8751, 0.05) &&
                    within_rel(fa.missing, 4269, 0.05) && within_rel(fa.all, 14099, 0.02);
    list.record(2, "gendered counts (+-5%, first authors +-2%)", ok,
                "gendered papers " + vs(g.papers, 20657) + ", links " + vs(g.citations, 206405) +
                    ", F " + vs(fa.female, 1079) + ", M " + vs(fa.male, 8751) + ", missing " +
                    vs(fa.missing, 4269) + ", first authors " + vs(fa.all, 14099));
  }

  {
    const auto& c = r.coverage;
    const bool ok = within_abs(c.avg_papers_per_gendered_author, 2.1, 0.1) &&
                    within_abs(c.pct_female_citing, 10.9, 1.5) &&
                    within_abs(c.pct_female_cited, 9.0, 1.5);
    list.record(3, "derived ratios", ok,
                "papers/gendered author " + vs(c.avg_papers_per_gendered_author, 2.1, 2) +
                    ", female citing % " + vs(c.pct_female_citing, 10.9, 2) +
                    ", female cited % " + vs(c.pct_female_cited, 9.0, 2));
  }

  {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& m : r.meme_frequencies) counts[m.meme] = m.count_all;
    std::string worst;
    double worst_dev = 0;
    std::size_t out_of_band = 0;
    for (const auto& [meme, want] : kTable3) {
      const double dev = std::abs(static_cast<double>(counts[meme]) - want) / want;
      if (dev > 0.05) ++out_of_band;
      if (dev >= worst_dev) {
        worst_dev = dev;
        worst = meme + " " + std::to_string(counts[meme]) + " vs " + fmt(want, 0);
      }
    }
    const auto& sel = r.selected_memes;
    const bool head = sel.size() >= 3 && sel[0] == "space" && sel[1] == "gauge" &&
                      sel[2] == "string";
    const bool ok = out_of_band == 0 && sel.size() == 15 && head;
    std::string first;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, sel.size()); ++i)
      first += (i ? "," : "") + sel[i];
    list.record(4, "meme frequencies (+-5%) and 15 selected memes", ok,
                std::to_string(out_of_band) + "/40 memes outside 5%, worst " + worst + " (" +
                    fmt(100 * worst_dev, 1) + "%), selected " + std::to_string(sel.size()) +
                    " headed by " + first);
  }

  {
    bool ok = r.author_corr.has_value() && r.corr_g.has_value();
    std::string detail = "unavailable";
    if (ok) {
      const auto& a = *r.author_corr;
      const bool largest =
          a.r_papers_made >= a.r_papers_received && a.r_papers_made >= a.r_made_received;
      ok = within_abs(a.r_papers_made, 0.67, 0.05) && largest &&
           within_abs(r.corr_g->r, -0.64, 0.10);
      detail = "r(papers,made) " + vs(a.r_papers_made, 0.67, 3) + ", r(papers,received) " +
               fmt(a.r_papers_received) + ", r(made,received) " + fmt(a.r_made_received) +
               ", r(f_g,P_g) " + vs(r.corr_g->r, -0.64, 3) + " over " +
               std::to_string(r.corr_g->used) + " memes";
    }
    list.record(5, "correlations", ok, detail);
  }

  {
    const auto& s = r.self_citation;
    const bool ok = s.all && s.female && s.male && within_abs(100 * *s.all, 22.6, 2) &&
                    within_abs(100 * *s.female, 24.0, 2) && within_abs(100 * *s.male, 24.9, 2);
    list.record(6, "self citations (+-2pp)", ok,
                "all % " + vs(100 * s.all.value_or(0), 22.6, 2) + ", female % " +
                    vs(100 * s.female.value_or(0), 24.0, 2) + ", male % " +
                    vs(100 * s.male.value_or(0), 24.9, 2));
  }

  {
    const auto& l = r.links;
    const bool ok = within_rel(l.mean_in_links, 20.50, 0.05) &&
                    within_rel(l.mean_out_links, 19.26, 0.05);
    list.record(7, "link averages (+-5%)", ok,
                "in " + vs(l.mean_in_links, 20.50, 2) + ", out " + vs(l.mean_out_links, 19.26, 2));
  }

  {
    const ScoreRow* spin = nullptr;
    for (const auto& row : r.score_table)
      if (row.meme == "spin") spin = &row;
    bool ok = spin && spin->P_F.finite() && spin->P_M.finite() && spin->P_g.finite();
    std::string detail = "spin scores not available";
    if (ok) {
      const double gap = std::abs(spin->P_F.value - spin->P_M.value) / spin->P_g.value;
      std::size_t larger = 0;
      std::string offenders;
      for (const auto& row : r.score_table) {
        if (row.meme == "spin") continue;
        if (!(row.P_F.finite() && row.P_M.finite() && row.P_g.finite())) {
          ++larger;
          offenders += " " + row.meme + "(NA)";
          continue;
        }
        const double g = std::abs(row.P_F.value - row.P_M.value) / row.P_g.value;
        if (!(g < gap)) {
          ++larger;
          offenders += " " + row.meme + "(" + fmt(g) + ")";
        }
      }
      ok = spin->P_M.value > spin->P_F.value && larger == 0;
      detail = "spin P_F " + fmt(spin->P_F.value) + " P_M " + fmt(spin->P_M.value) +
               " gap " + fmt(gap) + "; memes with gap >= spin:" +
               (offenders.empty() ? std::string(" none") : offenders);
    }
    list.record(8, "gendered propagation of \"spin\"", ok, detail);
  }

  return list.exit_code();
}
