#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hepmeme/paper_id.hpp"

namespace hepmeme {

struct PaperRecord {
  PaperId id;
  std::string title;
  std::string authors_raw;
  std::string abstract;
  std::string date_raw;

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

struct CitationEdge {
  PaperId citing;
  PaperId cited;

  friend auto operator<=>(const CitationEdge&, const CitationEdge&) = default;
};

// One file that could not be turned into a record.
struct SkippedFile {
  std::string path;
  std::string reason;
};

// Counters from both parsing stages and from corpus assembly. The edge
// identity edges_read = retained + dropped_unknown_endpoint +
// dropped_self_loop + duplicate_edges always holds after build_corpus.
struct IngestReport {
  std::size_t files_seen = 0;
  std::size_t records_parsed = 0;
  std::size_t skipped_malformed = 0;
  std::size_t skipped_invalid_id = 0;
  std::size_t duplicate_records = 0;
  std::vector<SkippedFile> skipped;

  std::size_t edge_lines_malformed = 0;
  std::size_t edges_read = 0;
  std::size_t edges_retained = 0;
  std::size_t dropped_unknown_endpoint = 0;
  std::size_t dropped_self_loop = 0;
  std::size_t duplicate_edges = 0;

  bool edges_reconcile() const {
    return edges_read == edges_retained + dropped_unknown_endpoint +
                             dropped_self_loop + duplicate_edges;
  }
};

// Directed citation graph over the dense paper indices of a Corpus, stored
// as compressed adjacency in both directions. Edges are unique and sorted.
class CitationGraph {
 public:
  CitationGraph() = default;
  // `edges` are (citing, cited) index pairs; must be sorted and unique.
  CitationGraph(std::size_t n_papers,
                std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t paper_count() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const std::pair<std::uint32_t, std::uint32_t>> edges() const { return edges_; }
  std::span<const std::uint32_t> cites(std::size_t paper) const;
  std::span<const std::uint32_t> cited_by(std::size_t paper) const;
  std::size_t out_degree(std::size_t paper) const { return cites(paper).size(); }
  std::size_t in_degree(std::size_t paper) const { return cited_by(paper).size(); }

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<std::uint32_t> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<std::uint32_t> in_sources_;
};

// Immutable, validated corpus. Papers are held in ascending id order; the
// position of a paper in that order is its dense index, used by every
// per-paper vector in the library.
class Corpus;
Corpus read_snapshot(std::istream& in);

class Corpus {
 public:
  Corpus() = default;

  std::size_t size() const { return papers_.size(); }
  const std::vector<PaperRecord>& papers() const { return papers_; }
  const PaperRecord& paper(std::size_t index) const { return papers_[index]; }
  const CitationGraph& graph() const { return graph_; }
  const IngestReport& report() const { return report_; }

  std::optional<std::size_t> index_of(PaperId id) const;

  // Edges as id pairs, in ascending (citing, cited) order.
  std::vector<CitationEdge> edge_list() const;

 private:
  friend Corpus build_corpus(std::vector<PaperRecord>, std::span<const CitationEdge>,
                             IngestReport);
  friend Corpus read_snapshot(std::istream&);

  std::vector<PaperRecord> papers_;
  std::unordered_map<PaperId, std::uint32_t> index_;
  CitationGraph graph_;
  IngestReport report_;
};

// Subset of a corpus' papers, as a membership mask over dense indices.
class PaperSet {
 public:
  PaperSet() = default;
  explicit PaperSet(std::size_t corpus_size) : mask_(corpus_size, 0) {}

  static PaperSet all(const Corpus& corpus);
  static PaperSet of_ids(const Corpus& corpus, std::span<const PaperId> ids);

  template <typename Pred>
  static PaperSet where(std::size_t corpus_size, Pred&& pred) {
    PaperSet s(corpus_size);
    for (std::size_t i = 0; i < corpus_size; ++i)
      if (pred(i)) s.insert(i);
    return s;
  }

  void insert(std::size_t index) {
    if (!mask_[index]) {
      mask_[index] = 1;
      ++count_;
    }
  }
  bool contains(std::size_t index) const { return mask_[index] != 0; }
  std::size_t count() const { return count_; }
  std::size_t corpus_size() const { return mask_.size(); }
  bool empty() const { return count_ == 0; }

  PaperSet intersect(const PaperSet& other) const;
  bool is_subset_of(const PaperSet& other) const;

  friend bool operator==(const PaperSet&, const PaperSet&) = default;

 private:
  std::vector<unsigned char> mask_;
  std::size_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing

// Parses one arXiv `.abs` record. Throws MalformedRecord or InvalidPaperId.
PaperRecord parse_abstract_record(std::string_view text);

struct ParsedArchive {
  std::vector<PaperRecord> records;  // ascending id, unique
  IngestReport report;               // file-level counters only
};

// Reads every `.abs` file under a directory tree, or inside a .tar/.tar.gz
// archive. Per-file failures are counted, not thrown; IoError if the path
// itself cannot be read.
ParsedArchive parse_abstract_archive(const std::filesystem::path& path,
                                     unsigned threads = 0);

struct EdgeList {
  std::vector<CitationEdge> edges;  // file order
  std::size_t malformed_lines = 0;
};

// Parses "FromNodeId ToNodeId" lines; '#' starts a comment line. Plain or
// gzip-compressed input.
EdgeList parse_edge_list(const std::filesystem::path& path);
EdgeList parse_edge_list_text(std::string_view text);

// Keeps edges whose endpoints both have records, drops self loops and
// duplicates, and completes the counters in `report`.
Corpus build_corpus(std::vector<PaperRecord> records, std::span<const CitationEdge> edges,
                    IngestReport report = {});

struct CitingCitedSummary {
  std::size_t n_citing = 0;
  std::size_t n_cited = 0;
  std::size_t n_union = 0;
  std::size_t n_intersection = 0;

  friend bool operator==(const CitingCitedSummary&, const CitingCitedSummary&) = default;
};

// Degrees are taken over edges with both endpoints inside `universe`.
CitingCitedSummary citing_cited_summary(const Corpus& corpus, const PaperSet& universe);

// Number of edges with both endpoints inside `universe`.
std::size_t edges_within(const Corpus& corpus, const PaperSet& universe);

}  // namespace hepmeme
