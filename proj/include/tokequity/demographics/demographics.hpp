#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tokequity/demographics/income.hpp"

namespace tokequity::demographics {

inline constexpr int kDefaultHorizon = 2022;

struct SpeakerRecord {
  std::string language;  // ISO 639-3
  std::string country;   // ISO 3166 alpha-3
  std::int64_t count = 0;
  std::optional<int> ref_year;
};

struct CountrySeries {
  std::string country;
  std::map<int, double> growth;  // year -> annual growth as a fraction
  std::optional<double> gdp_pc_2022;
  std::optional<IncomeClass> income_class;
};

using CountryTable = std::map<std::string, CountrySeries>;

// Per-class fractions indexed by index_of(IncomeClass).
using IncomeVector = std::array<double, 4>;

struct LanguageProfile {
  std::string language;
  std::map<std::string, double> adjusted_speakers_by_country;
  double total_speakers = 0.0;
  // Unset when no contributing country has the underlying indicator.
  std::optional<double> weighted_gdp;
  std::optional<IncomeVector> income_vector;
  std::optional<IncomeClass> wealth_class;
  // Human-readable reasons for any unset indicator.
  std::vector<std::string> notes;
};

// Speaker count carried forward to `horizon` by compounding annual growth for
// years ref_year+1 .. horizon. Identity when ref_year is absent or already at
// or past the horizon. `series` may be null only on the identity branch.
double adjust_speakers(const SpeakerRecord& record, const CountrySeries* series,
                       int horizon = kDefaultHorizon);

double total_speakers(const std::map<std::string, double>& adjusted);

// Speaker-weighted mean of per-capita GDP. Countries without GDP (absent from
// `gdp`) are left out of both sums.
double weighted_gdp(const std::map<std::string, double>& adjusted,
                    const std::map<std::string, double>& gdp);

// Speaker share per income class over countries with a known class.
IncomeVector income_vector(const std::map<std::string, double>& adjusted,
                           const std::map<std::string, IncomeClass>& classes);

// One profile per language, sorted by language code. Growth gaps and invalid
// records throw; missing GDP or class data only leaves indicators unset.
std::vector<LanguageProfile> build_profiles(const std::vector<SpeakerRecord>& records,
                                            const CountryTable& countries,
                                            int horizon = kDefaultHorizon);

void validate(const SpeakerRecord& record);
void validate(const CountrySeries& series);

}  // namespace tokequity::demographics
