#include "tokequity/demographics/worldbank.hpp"

#include <fmt/format.h>

#include <fstream>
#include <nlohmann/json.hpp>

#include "tokequity/error.hpp"
#include "tokequity/util/csv.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::demographics {

namespace {

using nlohmann::json;

int as_int(const json& v) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    if (auto i = util::parse_int(v.get<std::string>())) return static_cast<int>(*i);
  }
  throw ValidationError("World Bank API: expected an integer, got " + v.dump());
}

// Returns the record array of one page and the total page count.
std::pair<json, int> parse_page(const std::string& body, const std::string& what) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    throw ValidationError(what + ": response is not JSON (" + e.what() + ")");
  }
  if (doc.is_array() && !doc.empty() && doc[0].is_object() && doc[0].contains("message")) {
    throw ValidationError(what + ": API error " + doc[0]["message"].dump());
  }
  if (!doc.is_array() || doc.size() < 2 || !doc[0].is_object()) {
    throw ValidationError(what + ": unexpected response shape");
  }
  json records = doc[1].is_array() ? doc[1] : json::array();
  return {records, as_int(doc[0].at("pages"))};
}

}  // namespace

WorldBankClient::WorldBankClient(WorldBankOptions options) : options_(std::move(options)) {
  while (!options_.base_url.empty() && options_.base_url.back() == '/') {
    options_.base_url.pop_back();
  }
}

std::string WorldBankClient::fetch(const std::string& path_and_query) {
  std::string url = options_.base_url + path_and_query;
  std::filesystem::path cached;
  if (!options_.cache_dir.empty()) {
    cached = options_.cache_dir / (util::sha256_hex(url) + ".json");
    if (std::filesystem::exists(cached)) return util::read_file(cached);
  }
  if (options_.offline) {
    throw TransportError("offline mode and no cached response for " + url);
  }
  ++network_requests_;
  auto res = util::http_get(url, {{"Accept", "application/json"}}, options_.retry);
  if (res.status != 200) {
    throw TransportError(fmt::format("{}: HTTP {}", url, res.status));
  }
  // Validate before caching so a bad body is never replayed offline.
  parse_page(res.body, url);
  if (!cached.empty()) util::write_file(cached, res.body);
  return res.body;
}

std::map<std::string, std::string> WorldBankClient::countries() {
  if (!country_cache_.empty()) return country_cache_;
  for (int page = 1, pages = 1; page <= pages; ++page) {
    auto body = fetch(fmt::format("/v2/country?format=json&per_page={}&page={}",
                                  options_.per_page, page));
    auto [records, total_pages] = parse_page(body, "country list");
    pages = total_pages;
    for (const auto& c : records) {
      if (c.value("region", json::object()).value("value", "") == "Aggregates") continue;
      auto id = c.value("id", "");
      if (id.size() != 3) continue;
      country_cache_[id] = c.value("incomeLevel", json::object()).value("id", "");
    }
  }
  return country_cache_;
}

std::map<std::string, std::map<int, double>> WorldBankClient::indicator(
    std::string_view code, int first_year, int last_year) {
  if (first_year > last_year) {
    throw ValidationError(fmt::format("empty year range {}:{}", first_year, last_year));
  }
  auto known = countries();
  std::map<std::string, std::map<int, double>> out;
  for (int page = 1, pages = 1; page <= pages; ++page) {
    auto body = fetch(fmt::format(
        "/v2/country/all/indicator/{}?format=json&date={}:{}&per_page={}&page={}", code,
        first_year, last_year, options_.per_page, page));
    auto [records, total_pages] = parse_page(body, std::string(code));
    pages = total_pages;
    for (const auto& r : records) {
      auto iso3 = r.value("countryiso3code", "");
      if (!known.contains(iso3)) continue;
      const auto& v = r.at("value");
      if (v.is_null()) continue;
      auto year = util::parse_int(r.value("date", ""));
      if (!year) continue;
      out[iso3][static_cast<int>(*year)] = v.get<double>();
    }
  }
  return out;
}

std::map<std::string, IncomeClass> WorldBankClient::income_classes() {
  std::map<std::string, IncomeClass> out;
  for (const auto& [iso3, level] : countries()) {
    if (auto c = parse_income_class(level)) out.emplace(iso3, *c);
  }
  return out;
}

CountryTable WorldBankClient::country_table(int first_growth_year, int horizon) {
  CountryTable table;
  for (const auto& [iso3, years] :
       indicator(kPopulationGrowthIndicator, first_growth_year, horizon)) {
    auto& s = table[iso3];
    s.country = iso3;
    for (const auto& [year, pct] : years) s.growth[year] = pct / 100.0;
  }
  for (const auto& [iso3, years] : indicator(kGdpPerCapitaIndicator, horizon, horizon)) {
    auto& s = table[iso3];
    s.country = iso3;
    if (auto it = years.find(horizon); it != years.end()) s.gdp_pc_2022 = it->second;
  }
  for (const auto& [iso3, cls] : income_classes()) {
    auto& s = table[iso3];
    s.country = iso3;
    s.income_class = cls;
  }
  return table;
}

void write_growth_csv(const std::filesystem::path& path, const CountryTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  util::CsvWriter w(out);
  w.row({"country", "year", "pop_growth_pct"});
  for (const auto& [iso3, s] : table) {
    for (const auto& [year, g] : s.growth) {
      w.row({iso3, std::to_string(year), fmt::format("{}", g * 100.0)});
    }
  }
}

void write_countries_csv(const std::filesystem::path& path, const CountryTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  util::CsvWriter w(out);
  w.row({"country", "gdp_pc_2022", "income_class"});
  for (const auto& [iso3, s] : table) {
    w.row({iso3, s.gdp_pc_2022 ? fmt::format("{}", *s.gdp_pc_2022) : "",
           s.income_class ? std::string(income_class_code(*s.income_class)) : ""});
  }
}

}  // namespace tokequity::demographics
