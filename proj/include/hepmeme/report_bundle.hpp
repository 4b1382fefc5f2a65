#pragma once

#include <filesystem>
#include <string>

#include "hepmeme/pipeline.hpp"

namespace hepmeme {

// Writes the fixed set of tab-separated report files plus summary.json into
// `dir` (created if needed):
//   table1.tsv table2.tsv self_citation.tsv distributions.tsv
//   correlations.tsv link_averages.tsv meme_frequencies.tsv score_table.tsv
//   summary.json
void write_report_bundle(const std::filesystem::path& dir, const AnalysisResult& result);

// Structured summary (same content as summary.json).
std::string summary_json(const AnalysisResult& result);

// One-screen plain text overview.
std::string summary_text(const AnalysisResult& result);

}  // namespace hepmeme
