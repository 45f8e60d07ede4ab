#include "tokequity/util/csv.hpp"

#include <ostream>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::util {

std::optional<std::size_t> CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CsvTable::require_column(std::string_view name,
                                     std::string_view source) const {
  if (auto idx = column(name)) return *idx;
  throw ValidationError(std::string(source) + ": missing required column '" +
                        std::string(name) + "'");
}

CsvTable parse_csv(std::string_view content, std::string_view source) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> record_lines;

  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      records.push_back(std::move(record));
      record_lines.push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !field.empty()) {
          throw ValidationError(std::string(source) + ":" + std::to_string(line) +
                                ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw ValidationError(std::string(source) + ": unterminated quoted field");
  }
  if (!field.empty() || !record.empty()) end_record();

  CsvTable table;
  std::size_t first = 0;
  while (first < records.size() && !records[first].empty() &&
         !records[first][0].empty() && records[first][0][0] == '#') {
    ++first;
  }
  if (first == records.size()) {
    throw ValidationError(std::string(source) + ": missing header row");
  }
  table.header = records[first];
  for (auto& h : table.header) h = std::string(trim(h));
  for (std::size_t r = first + 1; r < records.size(); ++r) {
    if (records[r].size() != table.header.size()) {
      throw ValidationError(std::string(source) + ":" +
                            std::to_string(record_lines[r]) + ": expected " +
                            std::to_string(table.header.size()) + " fields, got " +
                            std::to_string(records[r].size()));
    }
    table.rows.push_back(std::move(records[r]));
    table.row_lines.push_back(record_lines[r]);
  }
  return table;
}

CsvTable read_csv(const std::filesystem::path& path) {
  return parse_csv(read_file(path), path.string());
}

std::string csv_escape(std::string_view field) {
  bool needs_quotes = field.find_first_of(",\"\n\r") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void CsvWriter::comment(std::string_view text) { out_ << "# " << text << '\n'; }

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    out_ << csv_escape(fields[i]);
  }
  out_ << '\n';
}

}  // namespace tokequity::util
