#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hepmeme/corpus.hpp"

namespace hepmeme {

// Deletes TeX control words, folds case, and splits on anything that is
// not [a-z0-9]. Hyphens and apostrophes therefore separate tokens.
std::vector<std::string> tokenize_abstract(std::string_view text);

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::span<const std::string> words);

  // One token per line, '#' comments.
  static StopwordList parse(std::string_view text);
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view token) const { return words_.contains(std::string(token)); }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

class MemeLexicon {
 public:
  MemeLexicon() = default;
  // Throws InvalidLexicon on duplicates or entries that are not one token.
  explicit MemeLexicon(std::vector<std::string> memes);

  static MemeLexicon parse(std::string_view text);
  static MemeLexicon load(const std::filesystem::path& path);

  const std::vector<std::string>& memes() const { return memes_; }
  std::size_t size() const { return memes_.size(); }
  bool contains(std::string_view meme) const;

 private:
  std::vector<std::string> memes_;
};

struct TextOptions {
  bool include_titles = false;  // carriers and counts use abstracts only by default
};

enum class CountMode { Occurrences, Papers };

struct TokenCount {
  std::string token;
  std::uint64_t count = 0;

  friend bool operator==(const TokenCount&, const TokenCount&) = default;
};

// Descending by count, ties alphabetical.
std::vector<TokenCount> word_frequency_ranking(const Corpus& corpus, const PaperSet& universe,
                                               const StopwordList& stopwords, CountMode mode,
                                               TextOptions options = {}, unsigned threads = 0);

// meme -> carrier papers within a universe.
class CarrierIndex {
 public:
  CarrierIndex(PaperSet universe, std::vector<std::string> memes,
               std::vector<PaperSet> carriers);

  const PaperSet& universe() const { return universe_; }
  const std::vector<std::string>& memes() const { return memes_; }
  bool contains(std::string_view meme) const;
  // Throws UnknownMeme.
  const PaperSet& carriers(std::string_view meme) const;

 private:
  PaperSet universe_;
  std::vector<std::string> memes_;
  std::vector<PaperSet> carriers_;
};

// A paper carries a meme when the meme appears as a whole token in its
// abstract (and title, if requested).
CarrierIndex build_carrier_index(const Corpus& corpus, const PaperSet& universe,
                                 const MemeLexicon& lexicon, TextOptions options = {},
                                 unsigned threads = 0);

// |carriers| / |universe|. Throws EmptyUniverse and UnknownMeme.
double relative_frequency(const CarrierIndex& index, std::string_view meme);

// Memes with relative frequency strictly above `threshold`, highest first
// (ties alphabetical).
std::vector<std::string> select_memes_above(const CarrierIndex& index, double threshold);

}  // namespace hepmeme
