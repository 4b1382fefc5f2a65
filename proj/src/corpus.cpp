#include "hepmeme/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace hepmeme {

CitationGraph::CitationGraph(std::size_t n_papers,
                             std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : edges_(std::move(edges)),
      out_offsets_(n_papers + 1, 0),
      out_targets_(edges_.size()),
      in_offsets_(n_papers + 1, 0),
      in_sources_(edges_.size()) {
  for (auto [from, to] : edges_) {
    ++out_offsets_[from + 1];
    ++in_offsets_[to + 1];
  }
  for (std::size_t i = 0; i < n_papers; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Edges are sorted by (from, to), so both adjacency lists come out sorted.
  for (auto [from, to] : edges_) {
    out_targets_[out_fill[from]++] = to;
    in_sources_[in_fill[to]++] = from;
  }
}

std::span<const std::uint32_t> CitationGraph::cites(std::size_t paper) const {
  return std::span(out_targets_).subspan(out_offsets_[paper],
                                         out_offsets_[paper + 1] - out_offsets_[paper]);
}

std::span<const std::uint32_t> CitationGraph::cited_by(std::size_t paper) const {
  return std::span(in_sources_).subspan(in_offsets_[paper],
                                        in_offsets_[paper + 1] - in_offsets_[paper]);
}

std::optional<std::size_t> Corpus::index_of(PaperId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<CitationEdge> Corpus::edge_list() const {
  std::vector<CitationEdge> out;
  out.reserve(graph_.edge_count());
  for (auto [from, to] : graph_.edges()) out.push_back({papers_[from].id, papers_[to].id});
  return out;
}

PaperSet PaperSet::all(const Corpus& corpus) {
  return where(corpus.size(), [](std::size_t) { return true; });
}

PaperSet PaperSet::of_ids(const Corpus& corpus, std::span<const PaperId> ids) {
  PaperSet s(corpus.size());
  for (PaperId id : ids) {
    auto idx = corpus.index_of(id);
    if (!idx) throw std::invalid_argument("paper " + id.to_arxiv() + " is not in the corpus");
    s.insert(*idx);
  }
  return s;
}

PaperSet PaperSet::intersect(const PaperSet& other) const {
  if (other.corpus_size() != corpus_size())
    throw std::invalid_argument("paper sets from different corpora");
  return where(corpus_size(),
               [&](std::size_t i) { return contains(i) && other.contains(i); });
}

bool PaperSet::is_subset_of(const PaperSet& other) const {
  if (other.corpus_size() != corpus_size()) return false;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_[i]) return false;
  return true;
}

Corpus build_corpus(std::vector<PaperRecord> records, std::span<const CitationEdge> edges,
                    IngestReport report) {
  Corpus corpus;
  std::stable_sort(records.begin(), records.end(),
                   [](const PaperRecord& a, const PaperRecord& b) { return a.id < b.id; });
  for (auto& rec : records) {
    if (!corpus.papers_.empty() && corpus.papers_.back().id == rec.id) {
      ++report.duplicate_records;
      continue;
    }
    corpus.papers_.push_back(std::move(rec));
  }
  corpus.index_.reserve(corpus.papers_.size());
  for (std::uint32_t i = 0; i < corpus.papers_.size(); ++i)
    corpus.index_.emplace(corpus.papers_[i].id, i);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> kept;
  kept.reserve(edges.size());
  report.edges_read = edges.size();
  report.dropped_unknown_endpoint = 0;
  report.dropped_self_loop = 0;
  for (const auto& e : edges) {
    auto from = corpus.index_.find(e.citing);
    auto to = corpus.index_.find(e.cited);
    if (from == corpus.index_.end() || to == corpus.index_.end()) {
      ++report.dropped_unknown_endpoint;
    } else if (from->second == to->second) {
      ++report.dropped_self_loop;
    } else {
      kept.emplace_back(from->second, to->second);
    }
  }
  std::sort(kept.begin(), kept.end());
  const std::size_t before = kept.size();
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  report.duplicate_edges = before - kept.size();
  report.edges_retained = kept.size();

  corpus.graph_ = CitationGraph(corpus.papers_.size(), std::move(kept));
  corpus.report_ = std::move(report);
  return corpus;
}

CitingCitedSummary citing_cited_summary(const Corpus& corpus, const PaperSet& universe) {
  const auto& g = corpus.graph();
  CitingCitedSummary s;
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    if (!universe.contains(p)) continue;
    bool citing = std::any_of(g.cites(p).begin(), g.cites(p).end(),
                              [&](std::uint32_t q) { return universe.contains(q); });
    bool cited = std::any_of(g.cited_by(p).begin(), g.cited_by(p).end(),
                             [&](std::uint32_t q) { return universe.contains(q); });
    s.n_citing += citing;
    s.n_cited += cited;
    s.n_union += citing || cited;
    s.n_intersection += citing && cited;
  }
  return s;
}

std::size_t edges_within(const Corpus& corpus, const PaperSet& universe) {
  std::size_t n = 0;
  for (auto [from, to] : corpus.graph().edges())
    n += universe.contains(from) && universe.contains(to);
  return n;
}

}  // namespace hepmeme
