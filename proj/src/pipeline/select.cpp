#include "tokequity/pipeline/select.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <ostream>

#include "tokequity/util/csv.hpp"

namespace tokequity::pipeline {

namespace {

using Ptr = const Candidate*;

std::vector<Ptr> top(std::vector<Ptr> pool, std::size_t n, double Candidate::*key) {
  std::sort(pool.begin(), pool.end(), [key](Ptr a, Ptr b) {
    if (a->*key != b->*key) return a->*key > b->*key;
    return a->code < b->code;
  });
  if (pool.size() > n) pool.resize(n);
  return pool;
}

}  // namespace

std::vector<Selected> select_languages(const std::vector<Candidate>& candidates,
                                       const SelectionRules& rules) {
  std::vector<Ptr> eligible;
  for (const auto& c : candidates) {
    if (c.code != rules.exclude) eligible.push_back(&c);
  }

  std::vector<Selected> out;
  std::map<std::string, std::size_t> position;
  auto add = [&](const std::vector<Ptr>& picks, const std::string& criterion) {
    for (Ptr p : picks) {
      auto [it, fresh] = position.emplace(p->code, out.size());
      if (fresh) out.push_back({*p, {}});
      out[it->second].criteria.push_back(criterion);
    }
  };

  for (auto tier : rules.tiers) {
    std::vector<Ptr> in_tier;
    std::vector<Ptr> heavy;
    for (Ptr p : eligible) {
      if (p->wealth_class != tier) continue;
      in_tier.push_back(p);
      if (p->premium >= rules.min_premium) heavy.push_back(p);
    }
    auto name = std::string(demographics::income_class_name(tier));
    add(top(in_tier, rules.top_premium, &Candidate::premium), name + ":top_premium");
    add(top(heavy, rules.top_population, &Candidate::total_speakers),
        name + ":top_population");
  }
  add(top(eligible, rules.global_top, &Candidate::total_speakers), "global:top_population");
  return out;
}

void write_selection_csv(std::ostream& out, const std::vector<Selected>& selected,
                         std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"language", "iso", "premium", "total_speakers", "wealth_class", "criteria"});
  for (const auto& s : selected) {
    const auto& c = s.candidate;
    std::string criteria;
    for (const auto& k : s.criteria) criteria += (criteria.empty() ? "" : ";") + k;
    w.row({c.code, c.iso, fmt::format("{:.6f}", c.premium),
           fmt::format("{:.0f}", c.total_speakers),
           c.wealth_class ? std::string(demographics::income_class_name(*c.wealth_class)) : "",
           criteria});
  }
}

std::vector<std::string> read_selection_codes(const std::string& path) {
  auto t = util::read_csv(path);
  auto col = t.require_column("language", path);
  std::vector<std::string> out;
  for (const auto& row : t.rows) out.push_back(row[col]);
  return out;
}

}  // namespace tokequity::pipeline
