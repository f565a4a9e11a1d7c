#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace humorkit::io {

/// Whole-file read; throws IoFailure naming the path.
std::string read_file(const std::filesystem::path& path);

/// Lines without their '\n' (a trailing '\r' is kept out as well).
std::vector<std::string> read_lines(const std::filesystem::path& path);

/// Writes to a sibling temporary and renames it over `path`, so readers never see a partial file.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Shortest decimal that round-trips through binary64, '.' separator regardless of locale.
std::string format_double(double value);

/// Exact hexadecimal float rendering, parsed back by `parse_hex_double`.
std::string format_hex_double(double value);
double parse_hex_double(std::string_view text);

}  // namespace humorkit::io
