#include "hepmeme/authorship.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "hepmeme/parallel.hpp"
#include "hepmeme/text.hpp"

namespace hepmeme {
namespace {

std::string remove_parenthesized(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  int depth = 0;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (depth > 0) --depth;
    } else if (depth == 0) {
      out += c;
    }
  }
  return out;
}

bool is_name_suffix(std::string_view normalized) {
  static constexpr std::array<std::string_view, 7> kSuffixes{"jr", "jr.", "sr", "sr.",
                                                             "ii", "iii", "iv"};
  return std::find(kSuffixes.begin(), kSuffixes.end(), normalized) != kSuffixes.end();
}

}  // namespace

bool is_initial(std::string_view token) {
  if (token.empty()) return true;
  if (token.back() == '.') return true;
  std::size_t letters = 0;
  bool all_parts_single = true;
  std::size_t part_len = 0;
  for (char c : token) {
    if (c == '-') {
      all_parts_single = all_parts_single && part_len <= 1;
      part_len = 0;
    } else if (c != '.') {
      ++letters;
      ++part_len;
    }
  }
  all_parts_single = all_parts_single && part_len <= 1;
  return letters <= 1 || all_parts_single;
}

AuthorName make_author_name(std::string_view fragment) {
  AuthorName name;
  name.normalized_full = text::normalize_name(fragment);
  auto tokens = text::split_whitespace(name.normalized_full);
  if (tokens.size() >= 2 && !is_initial(tokens.front())) {
    name.given = std::string(tokens.front());
    const auto rest = name.normalized_full.find(' ');
    name.family = name.normalized_full.substr(rest + 1);
  } else {
    name.family = name.normalized_full;
  }
  return name;
}

std::vector<AuthorName> split_author_field(std::string_view authors_raw) {
  std::string cleaned = remove_parenthesized(authors_raw);
  std::replace(cleaned.begin(), cleaned.end(), '&', ',');

  std::vector<AuthorName> out;
  auto emit = [&](const std::vector<std::string_view>& tokens) {
    if (tokens.empty()) return;
    std::string joined;
    for (auto t : tokens) {
      if (!joined.empty()) joined += ' ';
      joined.append(t);
    }
    AuthorName name = make_author_name(joined);
    if (!name.normalized_full.empty() && !is_name_suffix(name.normalized_full))
      out.push_back(std::move(name));
  };

  std::string_view rest = cleaned;
  while (true) {
    const auto comma = rest.find(',');
    std::string_view fragment = rest.substr(0, comma);
    std::vector<std::string_view> tokens;
    for (auto tok : text::split_whitespace(fragment)) {
      if (tok == "and") {
        emit(tokens);
        tokens.clear();
      } else {
        tokens.push_back(tok);
      }
    }
    emit(tokens);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t Authorship::papers_with_authors() const {
  return static_cast<std::size_t>(
      std::count_if(first_author.begin(), first_author.end(),
                    [](const auto& slot) { return slot.has_value(); }));
}

Authorship assign_author_ids(const Corpus& corpus, unsigned threads) {
  Authorship a;
  a.paper_authors = parallel_map<std::vector<AuthorName>>(
      corpus.size(), threads,
      [&](std::size_t i) { return split_author_field(corpus.paper(i).authors_raw); });

  std::map<std::string, const AuthorName*> distinct;
  for (const auto& authors : a.paper_authors)
    if (!authors.empty()) distinct.emplace(authors.front().normalized_full, &authors.front());

  std::map<std::string_view, std::uint32_t> slot_of;
  a.authors.reserve(distinct.size());
  for (const auto& [key, name] : distinct) {
    const auto slot = static_cast<std::uint32_t>(a.authors.size());
    AuthorRecord rec;
    rec.author_id = slot + 1;
    rec.name = *name;
    a.authors.push_back(std::move(rec));
    slot_of.emplace(a.authors.back().name.normalized_full, slot);
  }

  a.first_author.assign(corpus.size(), std::nullopt);
  for (std::size_t p = 0; p < corpus.size(); ++p) {
    const auto& authors = a.paper_authors[p];
    if (authors.empty()) continue;
    const std::uint32_t slot = slot_of.at(authors.front().normalized_full);
    a.first_author[p] = slot;
    a.authors[slot].papers_first_authored.push_back(corpus.paper(p).id);
  }

  for (auto [from, to] : corpus.graph().edges()) {
    const auto& fa = a.first_author[from];
    const auto& ta = a.first_author[to];
    if (!fa || !ta) continue;
    ++a.authors[*fa].citations_made;
    ++a.authors[*ta].citations_received;
    ++a.edges_between_authored_papers;
  }
  return a;
}

}  // namespace hepmeme
