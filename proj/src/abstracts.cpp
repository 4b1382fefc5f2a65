#include <algorithm>
#include <variant>

#include "hepmeme/byte_source.hpp"
#include "hepmeme/corpus.hpp"
#include "hepmeme/errors.hpp"
#include "hepmeme/parallel.hpp"
#include "hepmeme/text.hpp"

namespace hepmeme {
namespace {

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? s.size() : nl;
    std::string_view line = s.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

bool is_delimiter(std::string_view line) { return text::trim(line) == "\\\\"; }

std::string join_trimmed(const std::vector<std::string_view>& parts) {
  std::string out;
  for (auto part : parts) {
    auto t = text::trim(part);
    if (t.empty()) continue;
    if (!out.empty()) out += ' ';
    out.append(t);
  }
  return out;
}

struct HeaderField {
  std::string name;
  std::vector<std::string_view> parts;
};

bool is_abs_name(std::string_view name) { return name.ends_with(".abs"); }

bool has_suffix(const std::filesystem::path& p, std::string_view suffix) {
  return p.string().ends_with(suffix);
}

struct Outcome {
  std::variant<PaperRecord, SkippedFile> value;
  bool invalid_id = false;
};

Outcome parse_file(std::string_view name, std::string_view contents) {
  try {
    return {parse_abstract_record(contents)};
  } catch (const InvalidPaperId& e) {
    return {SkippedFile{std::string(name), e.what()}, true};
  } catch (const MalformedRecord& e) {
    return {SkippedFile{std::string(name), e.what()}, false};
  }
}

}  // namespace

PaperRecord parse_abstract_record(std::string_view raw) {
  const std::string utf8 = text::to_valid_utf8(raw);
  const auto lines = split_lines(utf8);

  std::vector<std::size_t> delims;
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (is_delimiter(lines[i])) delims.push_back(i);
  if (delims.size() < 2) throw MalformedRecord("fewer than two '\\\\' section delimiters");

  std::vector<HeaderField> fields;
  bool open = false;
  for (std::size_t i = delims[0] + 1; i < delims[1]; ++i) {
    std::string_view line = lines[i];
    if (text::trim(line).empty()) {
      open = false;
      continue;
    }
    const bool indented = line.front() == ' ' || line.front() == '\t';
    const auto colon = line.find(':');
    if (!indented && colon != std::string_view::npos) {
      fields.push_back({std::string(text::trim(line.substr(0, colon))), {line.substr(colon + 1)}});
      open = true;
    } else if (open) {
      fields.back().parts.push_back(line);
    }
  }

  auto field = [&](std::initializer_list<std::string_view> names) -> const HeaderField* {
    for (const auto& f : fields)
      for (auto n : names)
        if (f.name == n) return &f;
    return nullptr;
  };

  const HeaderField* paper = field({"Paper"});
  if (paper == nullptr) throw MalformedRecord("no 'Paper:' field");
  auto id_tokens = text::split_whitespace(join_trimmed(paper->parts));
  if (id_tokens.empty()) throw InvalidPaperId("empty 'Paper:' field");

  PaperRecord rec;
  rec.id = PaperId::from_arxiv(id_tokens.front());
  if (const auto* f = field({"Title"})) rec.title = join_trimmed(f->parts);
  if (const auto* f = field({"Authors", "Author"})) rec.authors_raw = join_trimmed(f->parts);
  if (const auto* f = field({"Date"})) rec.date_raw = join_trimmed(f->parts);

  const std::size_t body_end = delims.size() > 2 ? delims[2] : lines.size();
  std::vector<std::string_view> body(lines.begin() + static_cast<std::ptrdiff_t>(delims[1]) + 1,
                                     lines.begin() + static_cast<std::ptrdiff_t>(body_end));
  rec.abstract = join_trimmed(body);
  return rec;
}

ParsedArchive parse_abstract_archive(const std::filesystem::path& path, unsigned threads) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec))
    throw IoError("cannot read '" + path.string() + "': no such file or directory");

  std::vector<Outcome> outcomes;
  if (std::filesystem::is_directory(path, ec)) {
    std::vector<std::filesystem::path> files;
    std::filesystem::recursive_directory_iterator it(path, ec), end;
    if (ec) throw IoError("cannot list '" + path.string() + "': " + ec.message());
    for (; it != end; it.increment(ec)) {
      if (ec) throw IoError("cannot list '" + path.string() + "': " + ec.message());
      if (it->is_regular_file() && is_abs_name(it->path().filename().string()))
        files.push_back(it->path());
    }
    std::sort(files.begin(), files.end());
    outcomes = parallel_map<Outcome>(files.size(), threads, [&](std::size_t i) {
      std::string contents;
      try {
        contents = io::read_file(files[i]);
      } catch (const IoError& e) {
        return Outcome{SkippedFile{files[i].string(), e.what()}, false};
      }
      return parse_file(files[i].string(), contents);
    });
  } else if (has_suffix(path, ".tar") || has_suffix(path, ".tar.gz") || has_suffix(path, ".tgz")) {
    const std::string tar = io::read_file(path);
    std::vector<std::pair<std::string, std::string_view>> entries;
    io::for_each_tar_entry(tar, [&](std::string_view name, std::string_view data) {
      if (is_abs_name(name)) entries.emplace_back(std::string(name), data);
    });
    std::sort(entries.begin(), entries.end());
    outcomes = parallel_map<Outcome>(entries.size(), threads, [&](std::size_t i) {
      return parse_file(entries[i].first, entries[i].second);
    });
  } else {
    throw IoError("'" + path.string() + "' is neither a directory nor a .tar/.tar.gz archive");
  }

  ParsedArchive result;
  auto& rep = result.report;
  rep.files_seen = outcomes.size();
  for (auto& o : outcomes) {
    if (auto* rec = std::get_if<PaperRecord>(&o.value)) {
      result.records.push_back(std::move(*rec));
    } else {
      (o.invalid_id ? rep.skipped_invalid_id : rep.skipped_malformed) += 1;
      rep.skipped.push_back(std::move(std::get<SkippedFile>(o.value)));
    }
  }
  std::stable_sort(result.records.begin(), result.records.end(),
                   [](const PaperRecord& a, const PaperRecord& b) { return a.id < b.id; });
  auto dup = std::unique(result.records.begin(), result.records.end(),
                         [](const PaperRecord& a, const PaperRecord& b) { return a.id == b.id; });
  rep.duplicate_records = static_cast<std::size_t>(result.records.end() - dup);
  result.records.erase(dup, result.records.end());
  rep.records_parsed = result.records.size();
  return result;
}

}  // namespace hepmeme
