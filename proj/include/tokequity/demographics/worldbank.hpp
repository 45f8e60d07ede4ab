#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "tokequity/demographics/demographics.hpp"
#include "tokequity/util/http.hpp"

namespace tokequity::demographics {

inline constexpr std::string_view kGdpPerCapitaIndicator = "NY.GDP.PCAP.CD";
inline constexpr std::string_view kPopulationGrowthIndicator = "SP.POP.GROW";

struct WorldBankOptions {
  std::string base_url = "https://api.worldbank.org";
  // Raw responses are stored as <cache_dir>/<sha256(url)>.json. Empty
  // disables caching.
  std::filesystem::path cache_dir;
  // Serve from the cache only; a miss is a transport error.
  bool offline = false;
  int per_page = 1000;
  util::RetryPolicy retry;
};

// Client for the World Bank Indicators API v2. Aggregate regions are dropped
// so every key is an ISO 3166 alpha-3 country code.
class WorldBankClient {
 public:
  explicit WorldBankClient(WorldBankOptions options);

  // country -> year -> value, for years in [first_year, last_year]. Null
  // observations are omitted.
  std::map<std::string, std::map<int, double>> indicator(std::string_view code,
                                                         int first_year, int last_year);

  // Countries with one of the four income levels (LIC/LMC/UMC/HIC).
  std::map<std::string, IncomeClass> income_classes();

  // Growth for [first_growth_year, horizon] (percent converted to fractions),
  // GDP per capita for `horizon`, and income classes.
  CountryTable country_table(int first_growth_year, int horizon = kDefaultHorizon);

  // Number of requests that went to the network (cache hits excluded).
  int network_requests() const noexcept { return network_requests_; }

 private:
  std::string fetch(const std::string& path_and_query);
  std::map<std::string, std::string> countries();  // ISO3 -> income level id

  WorldBankOptions options_;
  int network_requests_ = 0;
  std::map<std::string, std::string> country_cache_;
};

// Writes the two CSVs that load_country_table reads.
void write_growth_csv(const std::filesystem::path& path, const CountryTable& table);
void write_countries_csv(const std::filesystem::path& path, const CountryTable& table);

}  // namespace tokequity::demographics
