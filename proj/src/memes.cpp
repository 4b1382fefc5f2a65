#include "hepmeme/memes.hpp"

#include <algorithm>
#include <map>

#include "hepmeme/byte_source.hpp"
#include "hepmeme/errors.hpp"
#include "hepmeme/parallel.hpp"
#include "hepmeme/text.hpp"

namespace hepmeme {
namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

std::string delete_control_words(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != '\\') {
      out += s[i++];
      continue;
    }
    ++i;
    while (i < s.size() && is_alpha(s[i])) ++i;
  }
  return out;
}

template <typename Fn>
void for_each_line(std::string_view data, Fn&& fn) {
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t nl = data.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? data.size() : nl;
    fn(text::trim(data.substr(start, end - start)));
    start = end + 1;
  }
}

std::vector<std::string> paper_tokens(const PaperRecord& p, const TextOptions& options) {
  auto tokens = tokenize_abstract(p.abstract);
  if (options.include_titles) {
    auto t = tokenize_abstract(p.title);
    tokens.insert(tokens.end(), std::make_move_iterator(t.begin()),
                  std::make_move_iterator(t.end()));
  }
  return tokens;
}

void check_universe(const Corpus& corpus, const PaperSet& universe) {
  if (universe.corpus_size() != corpus.size())
    throw std::invalid_argument("universe does not belong to this corpus");
}

}  // namespace

std::vector<std::string> tokenize_abstract(std::string_view input) {
  const std::string folded =
      text::ascii_lower(text::strip_diacritics(text::to_valid_utf8(delete_control_words(input))));
  std::vector<std::string> tokens;
  std::string current;
  for (char c : folded) {
    if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
      current += c;
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

StopwordList::StopwordList(std::span<const std::string> words) {
  for (const auto& w : words)
    for (auto& t : tokenize_abstract(w)) words_.insert(std::move(t));
}

StopwordList StopwordList::parse(std::string_view data) {
  std::vector<std::string> lines;
  for_each_line(data, [&](std::string_view line) {
    if (!line.empty() && line.front() != '#') lines.emplace_back(line);
  });
  return StopwordList(lines);
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  return parse(io::read_file(path));
}

MemeLexicon::MemeLexicon(std::vector<std::string> memes) {
  for (const auto& m : memes) {
    auto tokens = tokenize_abstract(m);
    if (tokens.size() != 1 || tokens.front() != text::ascii_lower(text::trim(m)))
      throw InvalidLexicon("meme '" + m + "' is not a single token");
    if (contains(tokens.front())) throw InvalidLexicon("duplicate meme '" + tokens.front() + "'");
    memes_.push_back(std::move(tokens.front()));
  }
}

MemeLexicon MemeLexicon::parse(std::string_view data) {
  std::vector<std::string> memes;
  for_each_line(data, [&](std::string_view line) {
    if (!line.empty() && line.front() != '#') memes.emplace_back(line);
  });
  return MemeLexicon(std::move(memes));
}

MemeLexicon MemeLexicon::load(const std::filesystem::path& path) {
  return parse(io::read_file(path));
}

bool MemeLexicon::contains(std::string_view meme) const {
  return std::find(memes_.begin(), memes_.end(), meme) != memes_.end();
}

std::vector<TokenCount> word_frequency_ranking(const Corpus& corpus, const PaperSet& universe,
                                               const StopwordList& stopwords, CountMode mode,
                                               TextOptions options, unsigned threads) {
  check_universe(corpus, universe);
  const unsigned n_threads = resolve_threads(threads);
  std::vector<std::map<std::string, std::uint64_t>> partial(n_threads);
  parallel_chunks(corpus.size(), n_threads, [&](std::size_t b, std::size_t e, unsigned t) {
    auto& counts = partial[t];
    for (std::size_t p = b; p < e; ++p) {
      if (!universe.contains(p)) continue;
      auto tokens = paper_tokens(corpus.paper(p), options);
      if (mode == CountMode::Papers) {
        std::sort(tokens.begin(), tokens.end());
        tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
      }
      for (auto& tok : tokens)
        if (!stopwords.contains(tok)) ++counts[std::move(tok)];
    }
  });
  std::map<std::string, std::uint64_t> merged;
  for (auto& m : partial)
    for (auto& [tok, n] : m) merged[tok] += n;

  std::vector<TokenCount> ranking;
  ranking.reserve(merged.size());
  for (auto& [tok, n] : merged) ranking.push_back({tok, n});
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const TokenCount& a, const TokenCount& b) { return a.count > b.count; });
  return ranking;
}

CarrierIndex::CarrierIndex(PaperSet universe, std::vector<std::string> memes,
                           std::vector<PaperSet> carriers)
    : universe_(std::move(universe)), memes_(std::move(memes)), carriers_(std::move(carriers)) {
  if (memes_.size() != carriers_.size())
    throw std::invalid_argument("one carrier set per meme required");
  for (const auto& c : carriers_)
    if (!c.is_subset_of(universe_))
      throw std::invalid_argument("carrier set is not contained in the universe");
}

bool CarrierIndex::contains(std::string_view meme) const {
  return std::find(memes_.begin(), memes_.end(), meme) != memes_.end();
}

const PaperSet& CarrierIndex::carriers(std::string_view meme) const {
  auto it = std::find(memes_.begin(), memes_.end(), meme);
  if (it == memes_.end()) throw UnknownMeme(std::string(meme));
  return carriers_[static_cast<std::size_t>(it - memes_.begin())];
}

CarrierIndex build_carrier_index(const Corpus& corpus, const PaperSet& universe,
                                 const MemeLexicon& lexicon, TextOptions options,
                                 unsigned threads) {
  check_universe(corpus, universe);
  std::map<std::string, std::size_t, std::less<>> slot;
  for (std::size_t i = 0; i < lexicon.size(); ++i) slot.emplace(lexicon.memes()[i], i);

  auto hits = parallel_map<std::vector<std::size_t>>(corpus.size(), threads, [&](std::size_t p) {
    std::vector<std::size_t> found;
    if (!universe.contains(p)) return found;
    for (const auto& tok : paper_tokens(corpus.paper(p), options))
      if (auto it = slot.find(tok); it != slot.end()) found.push_back(it->second);
    return found;
  });

  std::vector<PaperSet> carriers(lexicon.size(), PaperSet(corpus.size()));
  for (std::size_t p = 0; p < hits.size(); ++p)
    for (auto m : hits[p]) carriers[m].insert(p);
  return CarrierIndex(universe, lexicon.memes(), std::move(carriers));
}

double relative_frequency(const CarrierIndex& index, std::string_view meme) {
  const auto& carriers = index.carriers(meme);
  if (index.universe().empty()) throw EmptyUniverse("relative frequency over an empty universe");
  return static_cast<double>(carriers.count()) / static_cast<double>(index.universe().count());
}

std::vector<std::string> select_memes_above(const CarrierIndex& index, double threshold) {
  std::vector<std::pair<double, std::string>> picked;
  for (const auto& m : index.memes()) {
    double f = relative_frequency(index, m);
    if (f > threshold) picked.emplace_back(f, m);
  }
  std::sort(picked.begin(), picked.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::string> out;
  for (auto& [f, m] : picked) out.push_back(std::move(m));
  return out;
}

}  // namespace hepmeme
