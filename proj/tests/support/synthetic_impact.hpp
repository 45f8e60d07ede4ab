#pragma once

// The synthetic demographic fixture and its independently computed matrices
// (tests/oracle/impact_oracle.py), shared by unit and acceptance tests.

#include <cstdlib>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "test_support.hpp"
#include "tokequity/demographics/ingest.hpp"
#include "tokequity/impact/distribution.hpp"
#include "tokequity/premium/report.hpp"
#include "tokequity/util/csv.hpp"

namespace tokequity::testing {

inline impact::ImpactMatrix synthetic_matrix(impact::AttributionMode mode) {
  const auto dir = repo_data("demographics/synthetic");
  auto countries = demographics::load_country_table(dir / "growth.csv", dir / "countries.csv");
  auto profiles =
      demographics::build_profiles(demographics::read_speakers_csv(dir / "speakers.csv"),
                                   countries, 2022);
  auto premiums = impact::premiums_by_iso(premium::read_premium_csv(dir / "premium_synth.csv"));
  return impact::population_distribution(profiles, countries, premiums, mode);
}

struct ExpectedCell {
  std::string income_class;
  std::string band_label;
  double population;
  double share;
};

inline std::vector<ExpectedCell> expected_cells(impact::AttributionMode mode) {
  auto t = util::read_csv(test_data("impact/expected_" + std::string(impact::mode_name(mode)) +
                                    ".csv"));
  std::vector<ExpectedCell> out;
  for (const auto& r : t.rows) {
    // Shortest round-trip decimals, so strtod recovers the exact double.
    out.push_back({r[0], r[1], std::strtod(r[2].c_str(), nullptr),
                   std::strtod(r[3].c_str(), nullptr)});
  }
  return out;
}

inline nlohmann::json expected_summary() {
  return nlohmann::json::parse(util::read_file(test_data("impact/expected_summary.json")));
}

}  // namespace tokequity::testing
