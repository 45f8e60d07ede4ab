#include "tokequity/demographics/ingest.hpp"

#include <fmt/format.h>

#include <ostream>

#include "tokequity/error.hpp"
#include "tokequity/util/csv.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::demographics {

namespace {

std::string at(std::string_view source, std::size_t line) {
  return fmt::format("{}:{}", source, line);
}

std::string field(const util::CsvTable& t, std::size_t row, std::size_t col) {
  return std::string(util::trim(t.rows[row][col]));
}

}  // namespace

std::vector<SpeakerRecord> parse_speakers_csv(std::string_view content,
                                              std::string_view source) {
  auto t = util::parse_csv(content, source);
  auto c_lang = t.require_column("language", source);
  auto c_country = t.require_column("country", source);
  auto c_count = t.require_column("count", source);
  auto c_year = t.require_column("ref_year", source);

  std::vector<SpeakerRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto where = at(source, t.row_lines[i]);
    SpeakerRecord r;
    r.language = field(t, i, c_lang);
    r.country = field(t, i, c_country);
    if (r.language.empty()) throw ValidationError(where + ": empty language code");
    auto count = util::parse_int(field(t, i, c_count));
    if (!count) throw ValidationError(where + ": count is not an integer");
    r.count = *count;
    if (auto y = field(t, i, c_year); !y.empty()) {
      auto year = util::parse_int(y);
      if (!year) throw ValidationError(where + ": ref_year is not an integer");
      r.ref_year = static_cast<int>(*year);
    }
    try {
      validate(r);
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SpeakerRecord> read_speakers_csv(const std::filesystem::path& path) {
  return parse_speakers_csv(util::read_file(path), path.string());
}

void merge_growth_csv(std::string_view content, std::string_view source,
                      CountryTable& table) {
  auto t = util::parse_csv(content, source);
  auto c_country = t.require_column("country", source);
  auto c_year = t.require_column("year", source);
  auto c_pct = t.require_column("pop_growth_pct", source);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto where = at(source, t.row_lines[i]);
    auto country = field(t, i, c_country);
    auto year = util::parse_int(field(t, i, c_year));
    auto pct = util::parse_double(field(t, i, c_pct));
    if (country.empty() || !year || !pct) {
      throw ValidationError(where + ": expected country, integer year, numeric percent");
    }
    auto& s = table[country];
    s.country = country;
    if (!s.growth.emplace(static_cast<int>(*year), *pct / 100.0).second) {
      throw ValidationError(fmt::format("{}: second growth value for {} {}", where,
                                        country, *year));
    }
    try {
      validate(s);
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
}

void merge_countries_csv(std::string_view content, std::string_view source,
                         CountryTable& table) {
  auto t = util::parse_csv(content, source);
  auto c_country = t.require_column("country", source);
  auto c_gdp = t.require_column("gdp_pc_2022", source);
  auto c_class = t.require_column("income_class", source);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    auto where = at(source, t.row_lines[i]);
    auto country = field(t, i, c_country);
    if (country.empty()) throw ValidationError(where + ": empty country code");
    auto& s = table[country];
    s.country = country;
    if (auto g = field(t, i, c_gdp); !g.empty()) {
      auto v = util::parse_double(g);
      if (!v) throw ValidationError(where + ": gdp_pc_2022 is not a number");
      s.gdp_pc_2022 = *v;
    }
    if (auto c = field(t, i, c_class); !c.empty()) {
      auto cls = parse_income_class(c);
      if (!cls) throw ValidationError(where + ": unknown income class '" + c + "'");
      s.income_class = *cls;
    }
    try {
      validate(s);
    } catch (const Error& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
}

CountryTable load_country_table(const std::filesystem::path& growth_csv,
                                const std::filesystem::path& countries_csv) {
  CountryTable table;
  if (!growth_csv.empty()) {
    merge_growth_csv(util::read_file(growth_csv), growth_csv.string(), table);
  }
  if (!countries_csv.empty()) {
    merge_countries_csv(util::read_file(countries_csv), countries_csv.string(), table);
  }
  return table;
}

void write_profiles_csv(std::ostream& out, const std::vector<LanguageProfile>& profiles) {
  util::CsvWriter w(out);
  w.row({"language", "total_speakers", "weighted_gdp", "wealth_class", "low",
         "lower_middle", "upper_middle", "high", "countries", "notes"});
  for (const auto& p : profiles) {
    std::vector<std::string> row{p.language, fmt::format("{:.2f}", p.total_speakers)};
    row.push_back(p.weighted_gdp ? fmt::format("{:.2f}", *p.weighted_gdp) : "");
    row.emplace_back(p.wealth_class ? income_class_name(*p.wealth_class) : "");
    for (auto c : kIncomeClasses) {
      row.push_back(p.income_vector ? fmt::format("{:.6f}", (*p.income_vector)[index_of(c)])
                                    : "");
    }
    row.push_back(std::to_string(p.adjusted_speakers_by_country.size()));
    std::string notes;
    for (const auto& n : p.notes) notes += (notes.empty() ? "" : "; ") + n;
    row.push_back(notes);
    w.row(row);
  }
}

}  // namespace tokequity::demographics
