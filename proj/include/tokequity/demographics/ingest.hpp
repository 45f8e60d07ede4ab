#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "tokequity/demographics/demographics.hpp"

namespace tokequity::demographics {

// language,country,count,ref_year   (ref_year may be blank)
std::vector<SpeakerRecord> parse_speakers_csv(std::string_view content,
                                              std::string_view source);
std::vector<SpeakerRecord> read_speakers_csv(const std::filesystem::path& path);

// country,year,pop_growth_pct   (percent; stored as a fraction)
void merge_growth_csv(std::string_view content, std::string_view source,
                      CountryTable& table);

// country,gdp_pc_2022,income_class   (either value may be blank)
void merge_countries_csv(std::string_view content, std::string_view source,
                         CountryTable& table);

// Either path may be empty to skip that file.
CountryTable load_country_table(const std::filesystem::path& growth_csv,
                                const std::filesystem::path& countries_csv);

// language,total_speakers,weighted_gdp,wealth_class,low,lower_middle,
// upper_middle,high,countries,notes
void write_profiles_csv(std::ostream& out, const std::vector<LanguageProfile>& profiles);

}  // namespace tokequity::demographics
