#include "hepmeme/snapshot.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "hepmeme/errors.hpp"

namespace hepmeme {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kFormat = "hepmeme-corpus";
constexpr int kVersion = 1;

ordered_json report_to_json(const IngestReport& r) {
  ordered_json skipped = ordered_json::array();
  for (const auto& s : r.skipped) skipped.push_back({{"path", s.path}, {"reason", s.reason}});
  return {
      {"files_seen", r.files_seen},
      {"records_parsed", r.records_parsed},
      {"skipped_malformed", r.skipped_malformed},
      {"skipped_invalid_id", r.skipped_invalid_id},
      {"duplicate_records", r.duplicate_records},
      {"edge_lines_malformed", r.edge_lines_malformed},
      {"edges_read", r.edges_read},
      {"edges_retained", r.edges_retained},
      {"dropped_unknown_endpoint", r.dropped_unknown_endpoint},
      {"dropped_self_loop", r.dropped_self_loop},
      {"duplicate_edges", r.duplicate_edges},
      {"skipped", std::move(skipped)},
  };
}

IngestReport report_from_json(const ordered_json& j) {
  IngestReport r;
  r.files_seen = j.at("files_seen").get<std::size_t>();
  r.records_parsed = j.at("records_parsed").get<std::size_t>();
  r.skipped_malformed = j.at("skipped_malformed").get<std::size_t>();
  r.skipped_invalid_id = j.at("skipped_invalid_id").get<std::size_t>();
  r.duplicate_records = j.at("duplicate_records").get<std::size_t>();
  r.edge_lines_malformed = j.at("edge_lines_malformed").get<std::size_t>();
  r.edges_read = j.at("edges_read").get<std::size_t>();
  r.edges_retained = j.at("edges_retained").get<std::size_t>();
  r.dropped_unknown_endpoint = j.at("dropped_unknown_endpoint").get<std::size_t>();
  r.dropped_self_loop = j.at("dropped_self_loop").get<std::size_t>();
  r.duplicate_edges = j.at("duplicate_edges").get<std::size_t>();
  for (const auto& s : j.at("skipped"))
    r.skipped.push_back({s.at("path").get<std::string>(), s.at("reason").get<std::string>()});
  return r;
}

}  // namespace

std::string ingest_report_json(const IngestReport& report) {
  return report_to_json(report).dump(2);
}

void write_snapshot(const Corpus& corpus, std::ostream& out) {
  ordered_json header = {{"format", kFormat},
                         {"version", kVersion},
                         {"papers", corpus.size()},
                         {"edges", corpus.graph().edge_count()},
                         {"report", report_to_json(corpus.report())}};
  out << header.dump() << '\n';
  for (const auto& p : corpus.papers()) {
    ordered_json rec = {{"id", p.id.value()},
                        {"title", p.title},
                        {"authors_raw", p.authors_raw},
                        {"abstract", p.abstract},
                        {"date_raw", p.date_raw}};
    out << rec.dump() << '\n';
  }
  for (const auto& e : corpus.edge_list()) {
    ordered_json edge = {{"citing", e.citing.value()}, {"cited", e.cited.value()}};
    out << edge.dump() << '\n';
  }
}

void write_snapshot(const Corpus& corpus, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_snapshot(corpus, out);
  out.flush();
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

Corpus read_snapshot(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> MalformedRecord {
    return MalformedRecord("snapshot line " + std::to_string(line_no) + ": " + why);
  };
  if (!std::getline(in, line)) throw MalformedRecord("empty snapshot");
  ++line_no;

  ordered_json header;
  IngestReport report;
  std::size_t n_papers = 0, n_edges = 0;
  try {
    header = ordered_json::parse(line);
    if (header.at("format") != kFormat || header.at("version") != kVersion)
      throw fail("unsupported snapshot format");
    n_papers = header.at("papers").get<std::size_t>();
    n_edges = header.at("edges").get<std::size_t>();
    report = report_from_json(header.at("report"));
  } catch (const nlohmann::json::exception& e) {
    throw fail(e.what());
  }

  std::vector<PaperRecord> records;
  std::vector<CitationEdge> edges;
  records.reserve(n_papers);
  edges.reserve(n_edges);
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = ordered_json::parse(line);
      if (j.contains("citing")) {
        edges.push_back({PaperId(j.at("citing").get<std::uint32_t>()),
                         PaperId(j.at("cited").get<std::uint32_t>())});
      } else {
        records.push_back({PaperId(j.at("id").get<std::uint32_t>()),
                           j.at("title").get<std::string>(),
                           j.at("authors_raw").get<std::string>(),
                           j.at("abstract").get<std::string>(),
                           j.at("date_raw").get<std::string>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw fail(e.what());
    } catch (const InvalidPaperId& e) {
      throw fail(e.what());
    }
  }
  if (records.size() != n_papers || edges.size() != n_edges)
    throw MalformedRecord("snapshot truncated: expected " + std::to_string(n_papers) +
                          " papers and " + std::to_string(n_edges) + " edges");

  Corpus corpus = build_corpus(std::move(records), edges);
  if (corpus.graph().edge_count() != n_edges || corpus.size() != n_papers)
    throw MalformedRecord("snapshot edges or papers are not consistent");
  // The stored report describes the original ingest, not this reload.
  corpus.report_ = std::move(report);
  return corpus;
}

Corpus read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  return read_snapshot(in);
}

}  // namespace hepmeme
