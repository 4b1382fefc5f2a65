#include "hepmeme/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "hepmeme/byte_source.hpp"
#include "hepmeme/errors.hpp"
#include "hepmeme/pipeline.hpp"
#include "hepmeme/report_bundle.hpp"
#include "hepmeme/snapshot.hpp"
#include "hepmeme/text.hpp"
#include "propagation_oracle.hpp"

namespace hepmeme::cli {
namespace {

namespace fs = std::filesystem;

const std::string kDataDir = HEPMEME_DATA_DIR;

struct InputPaths {
  std::string abstracts, edges, snapshot;
};

struct Settings {
  InputPaths input;
  std::string output_dir = "hepmeme-out";
  std::string names;
  std::string stopwords = kDataDir + "/stopwords_en.txt";
  std::string lexicon = kDataDir + "/memes.txt";
  double gender_threshold = 0.95;
  std::uint64_t gender_min_count = 5;
  double meme_threshold = 0.08;
  bool include_titles = false;
  std::string universe_mode = "shared";
  std::string self_citation = "first";
  unsigned threads = 0;
  bool force = false;

  std::size_t top = 50;
  std::string count_mode = "papers";
  std::string universe = "all";

  std::uint64_t seed = 1;
  std::size_t trials = 1000;
  std::size_t max_papers = 50;
  std::size_t max_edges = 200;
  bool corrupt_counts = false;
};

// "key = value" lines; '#' comments; blank lines ignored.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> out;
  const std::string data = io::read_file(path);
  std::size_t start = 0, line_no = 0;
  while (start < data.size()) {
    std::size_t nl = data.find('\n', start);
    std::string_view line(data.data() + start, (nl == std::string::npos ? data.size() : nl) - start);
    start = nl == std::string::npos ? data.size() : nl + 1;
    ++line_no;
    line = text::trim(line);
    if (line.empty() || line.front() == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw InvalidConfig(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    std::string key(text::trim(line.substr(0, eq)));
    std::string value(text::trim(line.substr(eq + 1)));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    std::replace(key.begin(), key.end(), '_', '-');
    out[key] = value;
  }
  return out;
}

void add_input_options(CLI::App* sub, Settings& s) {
  sub->add_option("--abstracts", s.input.abstracts, "cit-HepTh-abstracts directory or .tar.gz");
  sub->add_option("--edges", s.input.edges, "cit-HepTh edge list (plain or .gz)");
  sub->add_option("--snapshot", s.input.snapshot, "corpus snapshot written by 'ingest'");
  sub->add_option("--threads", s.threads, "worker threads (0 = all cores)");
}

void add_output_dir(CLI::App* sub, Settings& s) {
  sub->add_option("--output-dir", s.output_dir, "output directory")->envname("HEPMEME_OUTPUT_DIR");
}

void add_analysis_options(CLI::App* sub, Settings& s) {
  sub->add_option("--names", s.names, "name table: name,proportion_female,count")->required();
  sub->add_option("--lexicon", s.lexicon, "meme lexicon, one meme per line");
  sub->add_option("--gender-threshold", s.gender_threshold, "female/male classification cut");
  sub->add_option("--gender-min-count", s.gender_min_count, "minimum observations per name");
  sub->add_option("--meme-threshold", s.meme_threshold, "relative frequency cut for memes");
  sub->add_flag("--include-titles", s.include_titles, "also search titles for memes");
  sub->add_option("--universe-mode", s.universe_mode, "shared | citing-only")
      ->check(CLI::IsMember({"shared", "citing-only"}));
  sub->add_option("--self-citation", s.self_citation, "first | any")
      ->check(CLI::IsMember({"first", "any"}));
}

Corpus load_corpus(const Settings& s, std::ostream& err) {
  if (!s.input.snapshot.empty()) return read_snapshot(fs::path(s.input.snapshot));
  if (s.input.abstracts.empty() || s.input.edges.empty())
    throw IoError("no input: give --snapshot, or both --abstracts and --edges");
  for (const auto& p : {s.input.abstracts, s.input.edges})
    if (!fs::exists(p)) throw IoError("cannot read '" + p + "': no such file or directory");
  ParsedArchive archive = parse_abstract_archive(s.input.abstracts, s.threads);
  EdgeList edges = parse_edge_list(s.input.edges);
  archive.report.edge_lines_malformed = edges.malformed_lines;
  Corpus corpus = build_corpus(std::move(archive.records), edges.edges, std::move(archive.report));
  const auto& r = corpus.report();
  if (r.skipped_malformed + r.skipped_invalid_id > 0)
    err << "note: skipped " << r.skipped_malformed << " malformed and " << r.skipped_invalid_id
        << " non-hep-th abstract files\n";
  return corpus;
}

AnalysisOptions analysis_options(const Settings& s) {
  AnalysisOptions o;
  o.gender.threshold = s.gender_threshold;
  o.gender.min_count = s.gender_min_count;
  o.meme_threshold = s.meme_threshold;
  o.text.include_titles = s.include_titles;
  o.universe_mode = s.universe_mode == "citing-only" ? UniverseMode::CitingOnly : UniverseMode::Shared;
  o.self_citation = s.self_citation == "any" ? SelfCitationMode::AnyAuthor : SelfCitationMode::FirstAuthor;
  o.threads = s.threads;
  o.validate();
  return o;
}

int cmd_ingest(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.input.abstracts.empty() || s.input.edges.empty())
    throw IoError("ingest needs --abstracts and --edges");
  for (const auto& p : {s.input.abstracts, s.input.edges})
    if (!fs::exists(p)) throw IoError("cannot read '" + p + "': no such file or directory");
  const fs::path snapshot = s.input.snapshot.empty() ? fs::path(s.output_dir) / "corpus.jsonl"
                                                     : fs::path(s.input.snapshot);
  if (fs::exists(snapshot) && !s.force) {
    err << "error: snapshot '" << snapshot.string() << "' exists; pass --force to overwrite\n";
    return kRefused;
  }
  Settings raw = s;
  raw.input.snapshot.clear();
  Corpus corpus = load_corpus(raw, err);
  if (snapshot.has_parent_path()) fs::create_directories(snapshot.parent_path());
  write_snapshot(corpus, snapshot);
  out << "records: " << corpus.size() << "\n";
  out << "edges: " << corpus.graph().edge_count() << " retained of "
      << corpus.report().edges_read << " read\n";
  out << "snapshot: " << snapshot.string() << "\n";
  out << ingest_report_json(corpus.report()) << "\n";
  return kOk;
}

int cmd_analyze(const Settings& s, bool print_summary, std::ostream& out, std::ostream& err) {
  const AnalysisOptions options = analysis_options(s);
  const Corpus corpus = load_corpus(s, err);
  const NameGenderTable names = NameGenderTable::load(s.names);
  if (names.malformed_rows() > 0)
    err << "note: skipped " << names.malformed_rows() << " malformed name table rows\n";
  const MemeLexicon lexicon = MemeLexicon::load(s.lexicon);

  const AnalysisResult result = run_analysis(corpus, names, lexicon, options);
  write_report_bundle(s.output_dir, result);
  if (print_summary) out << summary_text(result);
  out << "report bundle: " << s.output_dir << "\n";
  for (const auto& w : result.warnings) err << "warning: " << w << "\n";
  return result.correlations_insufficient ? kInsufficientData : kOk;
}

int cmd_memes(const Settings& s, std::ostream& out, std::ostream& err) {
  const Corpus corpus = load_corpus(s, err);
  const StopwordList stopwords = StopwordList::load(s.stopwords);
  PaperSet universe = PaperSet::all(corpus);
  if (s.universe == "gendered") {
    if (s.names.empty()) throw InvalidConfig("--universe gendered requires --names");
    GenderConfig cfg{s.gender_threshold, s.gender_min_count};
    cfg.validate();
    const auto authorship = assign_author_ids(corpus, s.threads);
    const auto genders =
        assign_genders(corpus, authorship, NameGenderTable::load(s.names), cfg, s.threads);
    universe = genders.gendered_papers();
  }
  const CountMode mode = s.count_mode == "occurrences" ? CountMode::Occurrences : CountMode::Papers;
  TextOptions text_options{s.include_titles};
  const auto ranking =
      word_frequency_ranking(corpus, universe, stopwords, mode, text_options, s.threads);
  out << "rank\ttoken\tcount\trelative_frequency\n";
  const std::size_t limit = s.top == 0 ? ranking.size() : std::min(s.top, ranking.size());
  for (std::size_t i = 0; i < limit; ++i) {
    char freq[32];
    std::snprintf(freq, sizeof freq, "%.6f",
                  universe.empty() ? 0.0
                                   : static_cast<double>(ranking[i].count) /
                                         static_cast<double>(universe.count()));
    out << i + 1 << '\t' << ranking[i].token << '\t' << ranking[i].count << '\t' << freq << '\n';
  }
  return kOk;
}

int cmd_oracle_check(const Settings& s, std::ostream& out, std::ostream& err) {
  if (s.trials == 0) {
    err << "warning: 0 trials requested; nothing was checked\n";
    out << "oracle-check: pass (0 trials)\n";
    return kOk;
  }
  if (s.max_papers == 0) throw InvalidConfig("--max-papers must be at least 1");
  std::mt19937_64 rng(s.seed);
  const MemeLexicon lexicon({std::string(oracle::kOracleMeme)});
  constexpr CitedFilter kFilters[] = {CitedFilter::All, CitedFilter::GenderedBoth,
                                      CitedFilter::CitedFemale, CitedFilter::CitedMale};
  constexpr UniverseMode kModes[] = {UniverseMode::Shared, UniverseMode::CitingOnly};
  for (std::size_t trial = 0; trial < s.trials; ++trial) {
    const oracle::Instance inst = oracle::random_instance(rng, s.max_papers, s.max_edges);
    const Corpus corpus = oracle::to_corpus(inst);
    const CarrierIndex index = build_carrier_index(corpus, PaperSet::all(corpus), lexicon, {}, 1);
    for (auto filter : kFilters) {
      for (auto mode : kModes) {
        PropagationCounts got =
            propagation_counts(corpus, index, oracle::kOracleMeme, filter, inst.gender, mode);
        if (s.corrupt_counts) ++got.d_mm;
        const PropagationCounts want = oracle::brute_force_counts(inst, filter, mode);
        if (got == want) continue;
        err << "oracle-check: MISMATCH at trial " << trial << " (seed " << s.seed << ", filter "
            << to_string(filter) << ", universe "
            << (mode == UniverseMode::Shared ? "shared" : "citing-only") << ")\n";
        err << "  expected d_mm=" << want.d_mm << " d_to_m=" << want.d_to_m
            << " d_mn=" << want.d_mn << " d_not_m=" << want.d_not_m << "\n";
        err << "  got      d_mm=" << got.d_mm << " d_to_m=" << got.d_to_m << " d_mn=" << got.d_mn
            << " d_not_m=" << got.d_not_m << "\n";
        out << "fixture: " << oracle::to_json(inst) << "\n";
        return kFailure;
      }
    }
  }
  out << "oracle-check: pass (" << s.trials << " trials x 8 configurations, seed " << s.seed
      << ")\n";
  return kOk;
}

std::vector<std::string> config_args(const std::map<std::string, std::string>& config,
                                     CLI::App* sub) {
  std::vector<std::string> args;
  for (const auto& [key, value] : config) {
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr)
      throw InvalidConfig("unknown configuration key '" + key + "' for '" + sub->get_name() + "'");
    if (opt->count() > 0) continue;  // command line wins
    if (opt->get_expected_min() == 0) {
      const std::string v = text::ascii_lower(value);
      if (v == "true" || v == "1" || v == "yes" || v == "on") args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  std::string config_path;
  CLI::App app{"hepmeme: gendered meme propagation analysis of the hep-th citation corpus"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);
  app.add_option("--config", config_path, "configuration file with 'key = value' lines");

  auto* ingest = app.add_subcommand("ingest", "parse the dataset and write a corpus snapshot");
  add_input_options(ingest, s);
  add_output_dir(ingest, s);
  ingest->add_flag("--force", s.force, "overwrite an existing snapshot");

  auto* analyze = app.add_subcommand("analyze", "run the full analysis and write the report bundle");
  add_input_options(analyze, s);
  add_output_dir(analyze, s);
  add_analysis_options(analyze, s);

  auto* report = app.add_subcommand("report", "re-emit the report bundle from a snapshot");
  add_input_options(report, s);
  add_output_dir(report, s);
  add_analysis_options(report, s);

  auto* memes = app.add_subcommand("memes", "word frequency ranking without stopwords");
  add_input_options(memes, s);
  memes->add_option("--stopwords", s.stopwords, "stopword list, one token per line");
  memes->add_option("--top", s.top, "rows to print (0 = all)");
  memes->add_option("--mode", s.count_mode, "papers | occurrences")
      ->check(CLI::IsMember({"papers", "occurrences"}));
  memes->add_option("--universe", s.universe, "all | gendered")
      ->check(CLI::IsMember({"all", "gendered"}));
  memes->add_option("--names", s.names, "name table (for --universe gendered)");
  memes->add_option("--gender-threshold", s.gender_threshold);
  memes->add_option("--gender-min-count", s.gender_min_count);
  memes->add_flag("--include-titles", s.include_titles);

  auto* oracle_check =
      app.add_subcommand("oracle-check", "compare propagation counts with a brute-force oracle");
  oracle_check->add_option("--seed", s.seed, "random seed");
  oracle_check->add_option("--trials", s.trials, "random instances to check");
  oracle_check->add_option("--max-papers", s.max_papers);
  oracle_check->add_option("--max-edges", s.max_edges);
  oracle_check->add_flag("--corrupt-counts", s.corrupt_counts)->group("");  // test hook

  std::vector<std::string> args(argv + 1, argv + argc);
  auto parse = [&](const std::vector<std::string>& a) {
    std::vector<std::string> reversed(a.rbegin(), a.rend());
    app.parse(reversed);
  };

  try {
    try {
      parse(args);
    } catch (const CLI::RequiredError&) {
      // a required option may still come from the config file
      if (config_path.empty() || app.get_subcommands().empty()) throw;
    }
    if (!config_path.empty()) {
      CLI::App* sub = app.get_subcommands().front();
      auto extra = config_args(read_config(config_path), sub);
      std::vector<std::string> merged = args;
      merged.insert(merged.end(), extra.begin(), extra.end());
      app.clear();
      s = Settings{};
      parse(merged);
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(s, out, err);
    if (analyze->parsed()) return cmd_analyze(s, true, out, err);
    if (report->parsed()) {
      if (s.input.snapshot.empty()) throw InvalidConfig("report needs --snapshot");
      return cmd_analyze(s, false, out, err);
    }
    if (memes->parsed()) return cmd_memes(s, out, err);
    if (oracle_check->parsed()) return cmd_oracle_check(s, out, err);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kConfigError;
}

}  // namespace hepmeme::cli
