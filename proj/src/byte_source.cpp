#include "hepmeme/byte_source.hpp"

#include <zlib.h>

#include <array>
#include <memory>

#include "hepmeme/errors.hpp"

namespace hepmeme::io {

std::string read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw IoError("cannot read '" + path.string() + "': not a regular file");
  // gzread passes uncompressed files through unchanged.
  std::unique_ptr<gzFile_s, decltype(&gzclose)> file(gzopen(path.c_str(), "rb"), &gzclose);
  if (!file) throw IoError("cannot open '" + path.string() + "'");
  gzbuffer(file.get(), 1 << 17);
  std::string out;
  std::array<char, 1 << 16> buf;
  for (;;) {
    int n = gzread(file.get(), buf.data(), static_cast<unsigned>(buf.size()));
    if (n < 0) {
      int err = 0;
      const char* msg = gzerror(file.get(), &err);
      throw IoError("error reading '" + path.string() + "': " + (msg ? msg : "unknown"));
    }
    if (n == 0) break;
    out.append(buf.data(), static_cast<std::size_t>(n));
  }
  return out;
}

namespace {

std::string_view cstr_field(std::string_view block, std::size_t off, std::size_t len) {
  std::string_view f = block.substr(off, len);
  auto nul = f.find('\0');
  return nul == std::string_view::npos ? f : f.substr(0, nul);
}

std::size_t octal_field(std::string_view block, std::size_t off, std::size_t len) {
  std::size_t v = 0;
  for (char c : block.substr(off, len)) {
    if (c == ' ' || c == '\0') {
      if (v != 0) break;
      continue;
    }
    if (c < '0' || c > '7') throw IoError("corrupt tar header (size field)");
    v = v * 8 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

}  // namespace

void for_each_tar_entry(std::string_view tar,
                        const std::function<void(std::string_view, std::string_view)>& visit) {
  constexpr std::size_t kBlock = 512;
  std::size_t pos = 0;
  std::string long_name;
  while (pos + kBlock <= tar.size()) {
    std::string_view header = tar.substr(pos, kBlock);
    if (header.find_first_not_of('\0') == std::string_view::npos) break;  // end marker
    const std::size_t size = octal_field(header, 124, 12);
    const char type = header[156];
    const std::size_t data_pos = pos + kBlock;
    if (data_pos + size > tar.size()) throw IoError("truncated tar archive");
    std::string_view data = tar.substr(data_pos, size);
    pos = data_pos + (size + kBlock - 1) / kBlock * kBlock;

    if (type == 'L') {
      long_name.assign(cstr_field(data, 0, data.size()));
      continue;
    }
    std::string name;
    if (!long_name.empty()) {
      name = std::move(long_name);
      long_name.clear();
    } else {
      std::string_view prefix = cstr_field(header, 345, 155);
      std::string_view base = cstr_field(header, 0, 100);
      bool ustar = header.substr(257, 5) == "ustar";
      name = (ustar && !prefix.empty()) ? std::string(prefix) + "/" + std::string(base)
                                        : std::string(base);
    }
    if (type == '0' || type == '\0') visit(name, data);
  }
}

}  // namespace hepmeme::io
