#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tokequity::util {

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Strict UTF-8 validation (rejects overlongs, surrogates, > U+10FFFF).
bool is_valid_utf8(std::string_view bytes);
// Length in bytes of the valid UTF-8 sequence starting at `pos`, or 0 when the
// bytes there do not begin a well-formed sequence.
std::size_t utf8_sequence_length(std::string_view bytes, std::size_t pos);

std::optional<std::int64_t> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);
std::vector<std::string> read_lines(const std::filesystem::path& path);

// Standard base64 alphabet with '=' padding; nullopt on any malformed input.
std::optional<std::string> base64_decode(std::string_view encoded);

std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace tokequity::util
