#pragma once

#include <filesystem>
#include <iosfwd>

#include "hepmeme/corpus.hpp"

namespace hepmeme {

// Line-delimited JSON snapshot of a corpus: a header object carrying the
// ingest report, one {"id","title","authors_raw","abstract","date_raw"}
// object per paper in ascending id order, then one {"citing","cited"}
// object per retained edge. Output is byte-identical for equal corpora.
void write_snapshot(const Corpus& corpus, std::ostream& out);
void write_snapshot(const Corpus& corpus, const std::filesystem::path& path);

// Throws MalformedRecord on a bad line and IoError on an unreadable file.
Corpus read_snapshot(std::istream& in);
Corpus read_snapshot(const std::filesystem::path& path);

// Ingest report as a JSON object (pretty printed).
std::string ingest_report_json(const IngestReport& report);

}  // namespace hepmeme
