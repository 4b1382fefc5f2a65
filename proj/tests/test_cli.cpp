#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hepmeme/byte_source.hpp"
#include "hepmeme/cli.hpp"

namespace hepmeme {
namespace {

namespace fs = std::filesystem;
const fs::path kMini = fs::path(HEPMEME_FIXTURES) / "mini";

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "hepmeme");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() / ("hepmeme_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  void write(const fs::path& p, const std::string& body) {
    fs::create_directories(p.parent_path());
    std::ofstream(p) << body;
  }

  // Four papers whose authors have uneven output, so author correlations exist.
  fs::path varied_corpus() {
    const fs::path root = dir / "varied";
    const char* papers[][3] = {{"9501001", "Ann X", "gauge space"},
                               {"9501002", "Ann X", "space string"},
                               {"9501003", "Bob Y", "spin gauge"},
                               {"9501004", "Carl Z", "space"}};
    for (const auto& p : papers)
      write(root / "abs" / (std::string(p[0]) + ".abs"),
            std::string("\\\\\nPaper: hep-th/") + p[0] + "\nTitle: T\nAuthors: " + p[1] +
                "\n\\\\\n  " + p[2] + "\n\\\\\n");
    write(root / "edges.txt",
          "9501002 9501001\n9501003 9501001\n9501004 9501002\n9501004 9501003\n9501003 9501002\n");
    write(root / "names.csv", "name,proportion_female,count\nann,1,10\nbob,0,10\ncarl,0,10\n");
    return root;
  }

  std::vector<std::string> mini_args(const std::string& cmd, const fs::path& out) {
    return {cmd,       "--abstracts", (kMini / "1992").string(), "--edges",
            (kMini / "edges.txt").string(), "--output-dir", out.string()};
  }
};

TEST_F(CliTest, IngestWritesSnapshotAndRefusesRerun) {
  auto args = mini_args("ingest", dir / "out");
  Result r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "out" / "corpus.jsonl"));
  EXPECT_NE(r.out.find("records: 5"), std::string::npos);
  EXPECT_NE(r.out.find("\"edges_read\": 8"), std::string::npos);

  r = run(args);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("--force"), std::string::npos);

  args.push_back("--force");
  EXPECT_EQ(run(args).code, 0);
}

TEST_F(CliTest, IngestMissingEdgesFile) {
  const std::string missing = (dir / "no-edges.txt").string();
  const Result r = run({"ingest", "--abstracts", kMini.string(), "--edges", missing,
                        "--output-dir", dir.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find(missing), std::string::npos);
}

TEST_F(CliTest, OutputDirFromEnvironment) {
  const fs::path env_dir = dir / "from-env";
  ::setenv("HEPMEME_OUTPUT_DIR", env_dir.c_str(), 1);
  const Result r = run({"ingest", "--abstracts", kMini.string(), "--edges",
                        (kMini / "edges.txt").string()});
  ::unsetenv("HEPMEME_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(env_dir / "corpus.jsonl"));
}

TEST_F(CliTest, AnalyzeTinyCorpusFlagsInsufficientData) {
  auto args = mini_args("analyze", dir / "bundle");
  args.insert(args.end(), {"--names", (kMini / "names.csv").string()});
  const Result r = run(args);
  EXPECT_EQ(r.code, 5) << r.err;
  EXPECT_NE(r.err.find("warning: author correlations"), std::string::npos);
  for (const char* f : {"table1.tsv", "table2.tsv", "self_citation.tsv", "distributions.tsv",
                        "correlations.tsv", "link_averages.tsv", "meme_frequencies.tsv",
                        "score_table.tsv", "summary.json"})
    EXPECT_TRUE(fs::exists(dir / "bundle" / f)) << f;
  const std::string scores = io::read_file(dir / "bundle" / "score_table.tsv");
  EXPECT_EQ(scores.substr(0, scores.find('\n')),
            "meme\tf_g\tf_F\tf_M\td_mm\td_to_m\td_mn\td_not_m\tP_g\tP_F\tP_M");
}

TEST_F(CliTest, AnalyzeRequiresNames) {
  EXPECT_EQ(run(mini_args("analyze", dir / "b")).code, 4);
}

TEST_F(CliTest, InvalidOptionValues) {
  auto args = mini_args("analyze", dir / "b");
  args.insert(args.end(), {"--names", (kMini / "names.csv").string()});
  auto bad = args;
  bad.insert(bad.end(), {"--gender-threshold", "0.4"});
  EXPECT_EQ(run(bad).code, 4);
  bad = args;
  bad.insert(bad.end(), {"--meme-threshold", "1.5"});
  EXPECT_EQ(run(bad).code, 4);
  bad = args;
  bad.insert(bad.end(), {"--universe-mode", "sideways"});
  EXPECT_EQ(run(bad).code, 4);
  EXPECT_EQ(run({"frobnicate"}).code, 4);
}

TEST_F(CliTest, MemeThresholdOneGivesEmptyTableAndWarning) {
  const fs::path v = varied_corpus();
  const Result r = run({"analyze", "--abstracts", (v / "abs").string(), "--edges",
                        (v / "edges.txt").string(), "--names", (v / "names.csv").string(),
                        "--meme-threshold", "1.0", "--output-dir", (dir / "b").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning: no meme exceeds"), std::string::npos);
  const std::string scores = io::read_file(dir / "b" / "score_table.tsv");
  EXPECT_EQ(std::count(scores.begin(), scores.end(), '\n'), 1);
}

TEST_F(CliTest, ReportFromSnapshotMatchesAnalyze) {
  const fs::path v = varied_corpus();
  ASSERT_EQ(run({"ingest", "--abstracts", (v / "abs").string(), "--edges",
                 (v / "edges.txt").string(), "--snapshot", (dir / "c.jsonl").string()})
                .code,
            0);
  const std::string names = (v / "names.csv").string();
  const Result a = run({"analyze", "--abstracts", (v / "abs").string(), "--edges",
                        (v / "edges.txt").string(), "--names", names, "--output-dir",
                        (dir / "a").string()});
  const Result b = run({"report", "--snapshot", (dir / "c.jsonl").string(), "--names", names,
                        "--output-dir", (dir / "b").string()});
  EXPECT_EQ(a.code, b.code);
  for (const auto& e : fs::directory_iterator(dir / "a"))
    EXPECT_EQ(io::read_file(e.path()), io::read_file(dir / "b" / e.path().filename()))
        << e.path().filename();
  EXPECT_EQ(run({"report", "--names", names, "--output-dir", (dir / "x").string()}).code, 4);
}

TEST_F(CliTest, BundleIsIdenticalAcrossThreadCounts) {
  const fs::path v = varied_corpus();
  std::vector<std::string> bundles;
  for (const char* threads : {"1", "2", "0"}) {
    const fs::path out = dir / (std::string("t") + threads);
    run({"analyze", "--abstracts", (v / "abs").string(), "--edges", (v / "edges.txt").string(),
         "--names", (v / "names.csv").string(), "--threads", threads, "--output-dir",
         out.string()});
    std::string all;
    for (const char* f : {"table1.tsv", "table2.tsv", "self_citation.tsv", "distributions.tsv",
                          "correlations.tsv", "link_averages.tsv", "meme_frequencies.tsv",
                          "score_table.tsv", "summary.json"})
      all += io::read_file(out / f);
    bundles.push_back(all);
  }
  EXPECT_EQ(bundles[0], bundles[1]);
  EXPECT_EQ(bundles[0], bundles[2]);
}

TEST_F(CliTest, ConfigFileSuppliesOptionsAndFlagsOverride) {
  const fs::path v = varied_corpus();
  write(dir / "run.conf", "# analysis settings\nabstracts = " + (v / "abs").string() +
                              "\nedges = \"" + (v / "edges.txt").string() + "\"\nnames = " +
                              (v / "names.csv").string() + "\nmeme_threshold = 1.0\n");
  Result r = run({"--config", (dir / "run.conf").string(), "analyze", "--output-dir",
                  (dir / "b").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("no meme exceeds"), std::string::npos);

  r = run({"--config", (dir / "run.conf").string(), "analyze", "--meme-threshold", "0.1",
           "--output-dir", (dir / "c").string()});
  EXPECT_EQ(r.err.find("no meme exceeds"), std::string::npos) << r.err;

  write(dir / "bad.conf", "colour = blue\n");
  EXPECT_EQ(run({"--config", (dir / "bad.conf").string(), "analyze"}).code, 4);
  write(dir / "bad2.conf", "no equals sign here\n");
  EXPECT_EQ(run({"--config", (dir / "bad2.conf").string(), "oracle-check"}).code, 4);
}

TEST_F(CliTest, MemesRanking) {
  const Result r = run({"memes", "--abstracts", (kMini / "1992").string(), "--edges",
                        (kMini / "edges.txt").string(), "--top", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "rank\ttoken\tcount\trelative_frequency\n"
            "1\tgauge\t3\t0.600000\n"
            "2\tspace\t3\t0.600000\n"
            "3\tspin\t2\t0.400000\n");
  const Result g = run({"memes", "--abstracts", (kMini / "1992").string(), "--edges",
                        (kMini / "edges.txt").string(), "--universe", "gendered", "--names",
                        (kMini / "names.csv").string(), "--top", "1"});
  EXPECT_EQ(g.out, "rank\ttoken\tcount\trelative_frequency\n1\tspace\t3\t1.000000\n");
  EXPECT_EQ(run({"memes", "--abstracts", (kMini / "1992").string(), "--edges",
                 (kMini / "edges.txt").string(), "--universe", "gendered"})
                .code,
            4);
}

TEST_F(CliTest, OracleCheck) {
  Result r = run({"oracle-check", "--seed", "1", "--trials", "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("pass"), std::string::npos);

  r = run({"oracle-check", "--trials", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);

  r = run({"oracle-check", "--trials", "5", "--corrupt-counts"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("MISMATCH"), std::string::npos);
  EXPECT_NE(r.out.find("fixture: {"), std::string::npos);
}

}  // namespace
}  // namespace hepmeme
