#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tokequity::util {

// A parsed CSV file. Rows keep the 1-based source line they started on so
// loaders can name the offending line in error messages.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;

  std::optional<std::size_t> column(std::string_view name) const;
  // Throws a validation error naming `source` when the column is absent.
  std::size_t require_column(std::string_view name, std::string_view source) const;
};

// RFC 4180 reader: quoted fields may contain commas, quotes ("") and newlines.
// Lines starting with '#' before the header are skipped.
CsvTable parse_csv(std::string_view content, std::string_view source = "<memory>");
CsvTable read_csv(const std::filesystem::path& path);

std::string csv_escape(std::string_view field);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void comment(std::string_view text);
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

}  // namespace tokequity::util
