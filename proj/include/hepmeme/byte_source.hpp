#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <string_view>

namespace hepmeme::io {

// Whole-file read; gzip input is inflated transparently.
std::string read_file(const std::filesystem::path& path);

// Calls visit(name, contents) for every regular file in a ustar/GNU tar
// stream (already decompressed).
void for_each_tar_entry(std::string_view tar,
                        const std::function<void(std::string_view, std::string_view)>& visit);

}  // namespace hepmeme::io
