#pragma once

#include <filesystem>
#include <fstream>
#include <string_view>

namespace rolestat {

// Opens a file for binary reading; IoError naming the path on failure.
std::ifstream open_input_file(const std::filesystem::path& path);

// Writes `content` to `path` via a temp file in the same directory and a
// rename, so readers never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

}  // namespace rolestat
