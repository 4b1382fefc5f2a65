#include "hepmeme/byte_source.hpp"
#include "hepmeme/corpus.hpp"
#include "hepmeme/errors.hpp"
#include "hepmeme/text.hpp"

namespace hepmeme {

EdgeList parse_edge_list_text(std::string_view data) {
  EdgeList out;
  std::size_t start = 0;
  while (start < data.size()) {
    std::size_t nl = data.find('\n', start);
    std::size_t end = nl == std::string_view::npos ? data.size() : nl;
    std::string_view line = text::trim(data.substr(start, end - start));
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    auto tokens = text::split_whitespace(line);
    if (tokens.size() != 2) {
      ++out.malformed_lines;
      continue;
    }
    try {
      out.edges.push_back({PaperId::from_decimal(tokens[0]), PaperId::from_decimal(tokens[1])});
    } catch (const InvalidPaperId&) {
      ++out.malformed_lines;
    }
  }
  return out;
}

EdgeList parse_edge_list(const std::filesystem::path& path) {
  return parse_edge_list_text(io::read_file(path));
}

}  // namespace hepmeme
