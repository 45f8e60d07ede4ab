#include "tokequity/premium/report.hpp"

#include <fmt/format.h>

#include <ostream>

#include "tokequity/error.hpp"
#include "tokequity/util/csv.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::premium {

void write_premium_csv(std::ostream& out, const std::vector<PremiumRecord>& records,
                       const std::map<std::string, double>& change_pct,
                       std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"language", "tokenizer", "total_tokens", "premium", "premium_change_pct"});
  for (const auto& r : records) {
    auto it = change_pct.find(r.language);
    w.row({r.language, r.tokenizer, std::to_string(r.total_tokens_lang),
           fmt::format("{:.6f}", r.premium),
           it == change_pct.end() ? "" : fmt::format("{:.2f}", it->second)});
  }
}

void write_change_csv(std::ostream& out, const std::vector<ChangeRecord>& changes,
                      std::string_view old_tokenizer, std::string_view new_tokenizer,
                      std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"language", "premium_" + std::string(old_tokenizer),
         "premium_" + std::string(new_tokenizer), "change_pct"});
  for (const auto& c : changes) {
    w.row({c.language, fmt::format("{:.2f}", c.premium_old),
           fmt::format("{:.2f}", c.premium_new), fmt::format("{:.2f}", c.change_pct)});
  }
}

std::vector<PremiumRecord> read_premium_csv(const std::filesystem::path& path) {
  auto source = path.string();
  auto t = util::read_csv(path);
  auto c_lang = t.require_column("language", source);
  auto c_tok = t.require_column("tokenizer", source);
  auto c_total = t.require_column("total_tokens", source);
  auto c_premium = t.require_column("premium", source);
  std::vector<PremiumRecord> out;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    PremiumRecord r;
    r.language = row[c_lang];
    r.tokenizer = row[c_tok];
    auto total = util::parse_int(row[c_total]);
    auto premium = util::parse_double(row[c_premium]);
    if (!total || *total < 0 || !premium || !(*premium > 0)) {
      throw ValidationError(fmt::format("{}:{}: bad total_tokens or premium", source,
                                        t.row_lines[i]));
    }
    r.total_tokens_lang = static_cast<std::size_t>(*total);
    r.premium = *premium;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tokequity::premium
