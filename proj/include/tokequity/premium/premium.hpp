#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/premium/corpus.hpp"
#include "tokequity/tokenizer/vocabulary.hpp"

namespace tokequity::premium {

inline constexpr std::string_view kEnglish = "eng_Latn";

struct PremiumRecord {
  std::string language;
  std::string tokenizer;
  std::size_t total_tokens_lang = 0;
  std::size_t total_tokens_eng = 0;
  // Ratio of corpus token totals (not a mean of per-sentence ratios).
  double premium = 0.0;
  std::vector<double> per_sentence_premiums;
};

// sum |t(a_i)| / sum |t(b_i)| over aligned sentences.
double premium_pair(const std::vector<std::string>& corpus_a,
                    const std::vector<std::string>& corpus_b,
                    const tokenizer::Vocabulary& table, unsigned threads = 1);

// `english` names the baseline key; `lang` may be given by ISO code.
PremiumRecord premium_vs_english(const ParallelCorpus& corpus, std::string_view lang,
                                 const tokenizer::Vocabulary& table,
                                 std::string_view english = kEnglish,
                                 unsigned threads = 1);

// Records for every language in the corpus, in corpus (code) order. English is
// tokenized once and reused.
std::vector<PremiumRecord> all_premiums(const ParallelCorpus& corpus,
                                        const tokenizer::Vocabulary& table,
                                        std::string_view english = kEnglish,
                                        unsigned threads = 1);

// 100 * (p_new - p_old) / p_old.
double premium_change(double p_old, double p_new);

struct ChangeRecord {
  std::string language;
  double premium_old = 0.0;
  double premium_new = 0.0;
  double change_pct = 0.0;
};

struct ChangeSummary {
  std::size_t languages = 0;      // baseline excluded
  double median_change_pct = 0.0;
  double mean_change_pct = 0.0;
  std::vector<std::string> increased;  // change_pct > 0, in language order
};

// Pairs records by language; both lists must cover the same languages.
std::vector<ChangeRecord> premium_changes(const std::vector<PremiumRecord>& old_records,
                                          const std::vector<PremiumRecord>& new_records);

// Summary over every language except `english`.
ChangeSummary summarize_changes(const std::vector<ChangeRecord>& changes,
                                std::string_view english = kEnglish);

}  // namespace tokequity::premium
