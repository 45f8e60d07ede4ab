#include "tokequity/premium/premium.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "tokequity/error.hpp"
#include "tokequity/tokenizer/bpe.hpp"

namespace tokequity::premium {

namespace {

PremiumRecord make_record(std::string language, const tokenizer::Vocabulary& table,
                          const tokenizer::TokenCounts& lang,
                          const tokenizer::TokenCounts& eng) {
  if (eng.total == 0) throw ValidationError("English side has no tokens");
  PremiumRecord r;
  r.language = std::move(language);
  r.tokenizer = table.name();
  r.total_tokens_lang = lang.total;
  r.total_tokens_eng = eng.total;
  r.premium = static_cast<double>(lang.total) / static_cast<double>(eng.total);
  r.per_sentence_premiums.reserve(lang.per_sentence.size());
  for (std::size_t i = 0; i < lang.per_sentence.size(); ++i) {
    // Non-empty sentences always yield at least one token.
    r.per_sentence_premiums.push_back(static_cast<double>(lang.per_sentence[i]) /
                                      static_cast<double>(eng.per_sentence[i]));
  }
  return r;
}

}  // namespace

double premium_pair(const std::vector<std::string>& corpus_a,
                    const std::vector<std::string>& corpus_b,
                    const tokenizer::Vocabulary& table, unsigned threads) {
  if (corpus_a.size() != corpus_b.size()) {
    throw ValidationError(fmt::format("corpora differ in length ({} vs {} sentences)",
                                      corpus_a.size(), corpus_b.size()));
  }
  auto a = tokenizer::count_tokens(corpus_a, table, threads);
  auto b = tokenizer::count_tokens(corpus_b, table, threads);
  if (b.total == 0) throw ValidationError("denominator corpus has no tokens");
  return static_cast<double>(a.total) / static_cast<double>(b.total);
}

PremiumRecord premium_vs_english(const ParallelCorpus& corpus, std::string_view lang,
                                 const tokenizer::Vocabulary& table,
                                 std::string_view english, unsigned threads) {
  auto eng_code = corpus.resolve(english);
  auto code = corpus.resolve(lang);
  auto eng = tokenizer::count_tokens(corpus.sentences(eng_code), table, threads);
  if (code == eng_code) return make_record(code, table, eng, eng);
  auto counts = tokenizer::count_tokens(corpus.sentences(code), table, threads);
  return make_record(code, table, counts, eng);
}

std::vector<PremiumRecord> all_premiums(const ParallelCorpus& corpus,
                                        const tokenizer::Vocabulary& table,
                                        std::string_view english, unsigned threads) {
  auto eng_code = corpus.resolve(english);
  auto eng = tokenizer::count_tokens(corpus.sentences(eng_code), table, threads);
  std::vector<PremiumRecord> out;
  out.reserve(corpus.languages().size());
  for (const auto& [code, sentences] : corpus.languages()) {
    if (code == eng_code) {
      out.push_back(make_record(code, table, eng, eng));
    } else {
      out.push_back(
          make_record(code, table, tokenizer::count_tokens(sentences, table, threads), eng));
    }
  }
  return out;
}

double premium_change(double p_old, double p_new) {
  if (!(p_old > 0) || !std::isfinite(p_old)) {
    throw ValidationError(fmt::format("old premium must be positive, got {}", p_old));
  }
  return 100.0 * (p_new - p_old) / p_old;
}

std::vector<ChangeRecord> premium_changes(const std::vector<PremiumRecord>& old_records,
                                          const std::vector<PremiumRecord>& new_records) {
  std::map<std::string, double> fresh;
  for (const auto& r : new_records) fresh[r.language] = r.premium;
  if (fresh.size() != old_records.size()) {
    throw ValidationError("premium lists cover different languages");
  }
  std::vector<ChangeRecord> out;
  for (const auto& r : old_records) {
    auto it = fresh.find(r.language);
    if (it == fresh.end()) {
      throw ValidationError("language " + r.language + " missing from the newer premiums");
    }
    out.push_back({r.language, r.premium, it->second, premium_change(r.premium, it->second)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.language < b.language; });
  return out;
}

ChangeSummary summarize_changes(const std::vector<ChangeRecord>& changes,
                                std::string_view english) {
  ChangeSummary s;
  std::vector<double> values;
  for (const auto& c : changes) {
    if (c.language == english) continue;
    values.push_back(c.change_pct);
    if (c.change_pct > 0) s.increased.push_back(c.language);
  }
  s.languages = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean_change_pct = sum / static_cast<double>(values.size());
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  s.median_change_pct = n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  return s;
}

}  // namespace tokequity::premium
