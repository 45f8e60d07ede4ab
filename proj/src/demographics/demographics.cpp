#include "tokequity/demographics/demographics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "tokequity/error.hpp"

namespace tokequity::demographics {

void validate(const SpeakerRecord& record) {
  if (record.count < 0) {
    throw ValidationError(fmt::format("{}/{}: negative speaker count {}", record.language,
                                      record.country, record.count));
  }
  if (record.ref_year && (*record.ref_year < 1900 || *record.ref_year > 2100)) {
    throw ValidationError(fmt::format("{}/{}: implausible reference year {}",
                                      record.language, record.country, *record.ref_year));
  }
}

void validate(const CountrySeries& series) {
  for (const auto& [year, g] : series.growth) {
    if (!(g > -0.2 && g < 0.2)) {
      throw ValidationError(fmt::format(
          "{}: growth rate {} for {} is outside (-20%, 20%); rates are fractions",
          series.country, g, year));
    }
  }
  if (series.gdp_pc_2022 && !(*series.gdp_pc_2022 >= 0)) {
    throw ValidationError(fmt::format("{}: negative GDP per capita", series.country));
  }
}

double adjust_speakers(const SpeakerRecord& record, const CountrySeries* series,
                       int horizon) {
  validate(record);
  double count = static_cast<double>(record.count);
  if (!record.ref_year || *record.ref_year >= horizon) return count;
  if (series == nullptr) {
    throw DataGapError(fmt::format("{}/{}: no growth series to carry {} forward to {}",
                                   record.language, record.country, *record.ref_year,
                                   horizon));
  }
  for (int year = *record.ref_year + 1; year <= horizon; ++year) {
    auto it = series->growth.find(year);
    if (it == series->growth.end()) {
      throw DataGapError(fmt::format("{}: population growth for {} is missing",
                                     series->country, year));
    }
    count *= 1.0 + it->second;
  }
  return count;
}

double total_speakers(const std::map<std::string, double>& adjusted) {
  if (adjusted.empty()) throw DataGapError("language has no speaker data");
  double sum = 0.0;
  for (const auto& [country, s] : adjusted) {
    if (s < 0) throw ValidationError(country + ": negative adjusted speaker count");
    sum += s;
  }
  return sum;
}

double weighted_gdp(const std::map<std::string, double>& adjusted,
                    const std::map<std::string, double>& gdp) {
  double num = 0.0;
  double den = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& [country, s] : adjusted) {
    auto it = gdp.find(country);
    if (it == gdp.end()) continue;
    num += s * it->second;
    den += s;
    lo = std::min(lo, it->second);
    hi = std::max(hi, it->second);
  }
  if (!(den > 0)) throw DataGapError("no speaking country has GDP data");
  // A weighted mean; rounding in num / den can land an ulp outside the range.
  return std::clamp(num / den, lo, hi);
}

IncomeVector income_vector(const std::map<std::string, double>& adjusted,
                           const std::map<std::string, IncomeClass>& classes) {
  IncomeVector v{};
  double den = 0.0;
  for (const auto& [country, s] : adjusted) {
    auto it = classes.find(country);
    if (it == classes.end()) continue;
    v[index_of(it->second)] += s;
    den += s;
  }
  if (!(den > 0)) throw DataGapError("no speaking country has an income class");
  for (double& x : v) x /= den;
  return v;
}

std::vector<LanguageProfile> build_profiles(const std::vector<SpeakerRecord>& records,
                                            const CountryTable& countries, int horizon) {
  std::map<std::string, LanguageProfile> by_language;
  for (const auto& r : records) {
    auto& p = by_language[r.language];
    p.language = r.language;
    // A record without a country keeps the language visible with no data.
    if (r.country.empty()) {
      validate(r);
      continue;
    }
    auto it = countries.find(r.country);
    double s = adjust_speakers(r, it == countries.end() ? nullptr : &it->second, horizon);
    auto [slot, inserted] = p.adjusted_speakers_by_country.emplace(r.country, s);
    if (!inserted) {
      throw ValidationError(
          fmt::format("duplicate speaker record for {} in {}", r.language, r.country));
    }
  }

  std::vector<LanguageProfile> out;
  out.reserve(by_language.size());
  for (auto& [code, p] : by_language) {
    if (p.adjusted_speakers_by_country.empty()) {
      p.notes.push_back("no resolvable country");
      out.push_back(std::move(p));
      continue;
    }
    p.total_speakers = total_speakers(p.adjusted_speakers_by_country);

    std::map<std::string, double> gdp;
    std::map<std::string, IncomeClass> classes;
    for (const auto& [country, s] : p.adjusted_speakers_by_country) {
      auto it = countries.find(country);
      if (it == countries.end()) continue;
      if (it->second.gdp_pc_2022) gdp.emplace(country, *it->second.gdp_pc_2022);
      if (it->second.income_class) classes.emplace(country, *it->second.income_class);
    }
    try {
      p.weighted_gdp = weighted_gdp(p.adjusted_speakers_by_country, gdp);
      p.wealth_class = classify_wealth(*p.weighted_gdp);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDataGap) throw;
      p.notes.push_back(e.what());
    }
    try {
      p.income_vector = income_vector(p.adjusted_speakers_by_country, classes);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kDataGap) throw;
      p.notes.push_back(e.what());
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tokequity::demographics
