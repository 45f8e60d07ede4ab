#include "tokequity/impact/distribution.hpp"

#include <fmt/format.h>

#include <nlohmann/json.hpp>
#include <ostream>
#include <set>

#include "tokequity/error.hpp"
#include "tokequity/premium/corpus.hpp"
#include "tokequity/util/csv.hpp"

namespace tokequity::impact {

using demographics::index_of;
using demographics::kIncomeClasses;

std::string_view mode_name(AttributionMode mode) {
  return mode == AttributionMode::kByCountryClass ? "by-country-class" : "by-language-wealth";
}

AttributionMode parse_mode(std::string_view text) {
  if (text == "by-country-class") return AttributionMode::kByCountryClass;
  if (text == "by-language-wealth") return AttributionMode::kByLanguageWealth;
  throw ValidationError("unknown attribution mode '" + std::string(text) +
                        "' (expected by-country-class or by-language-wealth)");
}

double ImpactMatrix::share(IncomeClass c, std::size_t band) const {
  double total = class_total[index_of(c)];
  return total > 0 ? population[index_of(c)][band] / total : 0.0;
}

std::vector<ImpactCell> ImpactMatrix::cells() const {
  std::vector<ImpactCell> out;
  for (auto c : kIncomeClasses) {
    for (std::size_t b = 0; b < kBandCount; ++b) {
      out.push_back({c, b, population[index_of(c)][b], share(c, b)});
    }
  }
  return out;
}

ImpactMatrix population_distribution(const std::vector<demographics::LanguageProfile>& profiles,
                                     const demographics::CountryTable& countries,
                                     const std::map<std::string, double>& premiums,
                                     AttributionMode mode) {
  ImpactMatrix m;
  m.mode = mode;
  std::map<std::string, const demographics::LanguageProfile*> by_code;
  for (const auto& p : profiles) by_code.emplace(p.language, &p);

  for (const auto& [code, premium] : premiums) {
    auto it = by_code.find(code);
    if (it == by_code.end()) {
      m.orphans.push_back(code);
      continue;
    }
    const auto& profile = *it->second;
    std::size_t band = band_index(premium);
    m.attributed += profile.total_speakers;

    if (mode == AttributionMode::kByLanguageWealth) {
      if (profile.wealth_class) {
        m.population[index_of(*profile.wealth_class)][band] += profile.total_speakers;
      } else {
        m.unclassified += profile.total_speakers;
      }
      continue;
    }
    for (const auto& [country, speakers] : profile.adjusted_speakers_by_country) {
      auto c = countries.find(country);
      if (c == countries.end() || !c->second.income_class) {
        m.unclassified += speakers;
      } else {
        m.population[index_of(*c->second.income_class)][band] += speakers;
      }
    }
  }
  for (const auto& p : profiles) {
    if (!premiums.contains(p.language)) m.unmeasured.push_back(p.language);
  }
  for (auto c : kIncomeClasses) {
    double total = 0.0;
    for (double v : m.population[index_of(c)]) total += v;
    m.class_total[index_of(c)] = total;
  }
  return m;
}

std::map<std::string, std::string> chosen_variants(
    const std::vector<premium::PremiumRecord>& records,
    const std::map<std::string, std::string>& preferred) {
  std::map<std::string, std::set<std::string>> variants;
  for (const auto& r : records) variants[premium::iso_of(r.language)].insert(r.language);

  std::map<std::string, std::string> out;
  for (const auto& [iso, codes] : variants) {
    if (auto pref = preferred.find(iso); pref != preferred.end()) {
      if (!codes.contains(pref->second)) {
        throw ValidationError(fmt::format("preferred variant {} for {} is not in the premiums",
                                          pref->second, iso));
      }
      out.emplace(iso, pref->second);
    } else {
      out.emplace(iso, *codes.begin());
    }
  }
  return out;
}

std::map<std::string, double> premiums_by_iso(
    const std::vector<premium::PremiumRecord>& records,
    const std::map<std::string, std::string>& preferred) {
  std::map<std::string, double> by_code;
  for (const auto& r : records) by_code[r.language] = r.premium;
  std::map<std::string, double> out;
  for (const auto& [iso, code] : chosen_variants(records, preferred)) {
    out.emplace(iso, by_code.at(code));
  }
  return out;
}

void write_impact_csv(std::ostream& out, const ImpactMatrix& m,
                      std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"income_class", "band_label", "population", "share"});
  for (const auto& cell : m.cells()) {
    w.row({std::string(demographics::income_class_name(cell.income_class)),
           std::string(kBands[cell.band].label), fmt::format("{:.2f}", cell.population),
           fmt::format("{:.6f}", cell.share)});
  }
}

std::string impact_plot_json(const ImpactMatrix& m, std::string_view tokenizer,
                             std::string_view manifest_hash) {
  nlohmann::json doc;
  doc["manifest_sha256"] = manifest_hash;
  doc["tokenizer"] = tokenizer;
  doc["mode"] = mode_name(m.mode);
  auto& bands = doc["bands"] = nlohmann::json::array();
  for (const auto& b : kBands) bands.push_back(b.label);
  auto& series = doc["series"] = nlohmann::json::array();
  for (auto c : kIncomeClasses) {
    nlohmann::json s;
    s["income_class"] = demographics::income_class_name(c);
    s["class_total"] = m.class_total[index_of(c)];
    for (std::size_t b = 0; b < kBandCount; ++b) {
      s["population"].push_back(m.population[index_of(c)][b]);
      s["share"].push_back(m.share(c, b));
    }
    series.push_back(std::move(s));
  }
  doc["attributed_population"] = m.attributed;
  doc["unclassified_population"] = m.unclassified;
  doc["orphans"] = m.orphans;
  doc["unmeasured"] = m.unmeasured;
  return doc.dump(2) + "\n";
}

}  // namespace tokequity::impact
