#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/demographics/demographics.hpp"
#include "tokequity/impact/bands.hpp"
#include "tokequity/premium/premium.hpp"

namespace tokequity::impact {

using demographics::IncomeClass;

enum class AttributionMode {
  // Each country's speaker slice counts toward that country's income class.
  kByCountryClass,
  // A language's whole population counts toward its GDP-weighted wealth class.
  kByLanguageWealth,
};

std::string_view mode_name(AttributionMode mode);
// "by-country-class" | "by-language-wealth"
AttributionMode parse_mode(std::string_view text);

struct ImpactCell {
  IncomeClass income_class;
  std::size_t band;  // index into kBands
  double population = 0.0;
  double share = 0.0;  // of the class population; 0 for an empty class
};

struct ImpactMatrix {
  AttributionMode mode = AttributionMode::kByCountryClass;
  std::array<std::array<double, kBandCount>, 4> population{};
  std::array<double, 4> class_total{};
  // Speakers of every language that has both a premium and a profile.
  double attributed = 0.0;
  // Part of `attributed` that could not be placed in a class.
  double unclassified = 0.0;
  // Premium languages without demographic data.
  std::vector<std::string> orphans;
  // Profiled languages without a premium (not measured; informational).
  std::vector<std::string> unmeasured;

  double share(IncomeClass c, std::size_t band) const;
  // All 4 x 8 cells, classes poorest first, bands ascending.
  std::vector<ImpactCell> cells() const;
};

// `premiums` is keyed by the profile language code (ISO 639-3).
ImpactMatrix population_distribution(const std::vector<demographics::LanguageProfile>& profiles,
                                     const demographics::CountryTable& countries,
                                     const std::map<std::string, double>& premiums,
                                     AttributionMode mode = AttributionMode::kByCountryClass);

// Collapses corpus variants ("zho_Hans", "zho_Hant") to one premium per ISO
// code. `preferred` maps an ISO code to the variant to use; otherwise the
// alphabetically first variant wins.
std::map<std::string, double> premiums_by_iso(
    const std::vector<premium::PremiumRecord>& records,
    const std::map<std::string, std::string>& preferred = {});

// The variant chosen for each ISO code under the same rule.
std::map<std::string, std::string> chosen_variants(
    const std::vector<premium::PremiumRecord>& records,
    const std::map<std::string, std::string>& preferred = {});

// income_class,band_label,population,share
void write_impact_csv(std::ostream& out, const ImpactMatrix& m, std::string_view manifest_hash);
// Stacked-bar series per class, plus orphans and totals.
std::string impact_plot_json(const ImpactMatrix& m, std::string_view tokenizer,
                             std::string_view manifest_hash);

}  // namespace tokequity::impact
