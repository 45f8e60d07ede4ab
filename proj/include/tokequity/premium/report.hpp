#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/premium/premium.hpp"

namespace tokequity::premium {

// language,tokenizer,total_tokens,premium,premium_change_pct
// `change_pct` is keyed by language; languages without an entry get an empty
// change cell. `manifest_hash` becomes a leading "# manifest_sha256:" line.
void write_premium_csv(std::ostream& out, const std::vector<PremiumRecord>& records,
                       const std::map<std::string, double>& change_pct,
                       std::string_view manifest_hash);

// language,premium_old,premium_new,change_pct
void write_change_csv(std::ostream& out, const std::vector<ChangeRecord>& changes,
                      std::string_view old_tokenizer, std::string_view new_tokenizer,
                      std::string_view manifest_hash);

// Reads the premium CSV back. Per-sentence diagnostics and the English total
// are not stored, so those fields stay empty / zero.
std::vector<PremiumRecord> read_premium_csv(const std::filesystem::path& path);

}  // namespace tokequity::premium
