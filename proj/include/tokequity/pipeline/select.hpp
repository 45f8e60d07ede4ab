#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/demographics/income.hpp"

namespace tokequity::pipeline {

struct Candidate {
  std::string code;  // corpus code, e.g. "hin_Deva"
  std::string iso;
  double premium = 0.0;
  double total_speakers = 0.0;
  std::optional<demographics::IncomeClass> wealth_class;
};

// Evaluation-language rules: for each tier, the top `top_premium` languages by
// premium and the top `top_population` by speakers among those with premium
// >= `min_premium`; then the `global_top` languages by speakers overall. Tiers
// are the language's wealth class (speaker-weighted GDP), not a country's.
struct SelectionRules {
  std::vector<demographics::IncomeClass> tiers = {demographics::IncomeClass::kLow,
                                                  demographics::IncomeClass::kLowerMiddle};
  std::size_t top_premium = 3;
  std::size_t top_population = 3;
  double min_premium = 4.0;
  std::size_t global_top = 5;
  std::string exclude = "eng_Latn";  // the translation target is never evaluated
};

struct Selected {
  Candidate candidate;
  std::vector<std::string> criteria;  // e.g. "low:top_premium", "global:top_population"
};

// Output follows rule order; a language matched by several rules appears once
// with every matching criterion. Ties break on the corpus code.
std::vector<Selected> select_languages(const std::vector<Candidate>& candidates,
                                       const SelectionRules& rules);

// language,iso,premium,total_speakers,wealth_class,criteria
void write_selection_csv(std::ostream& out, const std::vector<Selected>& selected,
                         std::string_view manifest_hash);
std::vector<std::string> read_selection_codes(const std::string& path);

}  // namespace tokequity::pipeline
