#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/judge/runner.hpp"

namespace tokequity::judge {

enum class BinaryMode { kZeroShot, kChainOfThought };
std::string_view mode_name(BinaryMode m);  // "zero_shot", "cot"

struct AccuracyRow {
  std::string language;
  std::string name;
  std::size_t sentences = 0;
  std::size_t translation_failed = 0;  // never judged
  std::size_t parsed = 0;
  std::size_t unparsed = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;

  // Percentages over parsed verdicts. A row with no parsed verdict is flagged
  // and its percentages print as "-".
  bool flagged() const { return parsed == 0; }
  double correct_pct() const;
  double incorrect_pct() const;
};

std::vector<AccuracyRow> accuracy_table(const std::vector<LanguageOutcome>& outcomes,
                                        BinaryMode mode);

// Rating order used by the scale table: Poor .. Excellent.
inline constexpr std::array<Scale, 5> kScaleAscending = {
    Scale::kPoor, Scale::kFair, Scale::kGood, Scale::kVeryGood, Scale::kExcellent};

struct ScaleRow {
  std::string language;
  std::string name;
  std::size_t sentences = 0;
  std::size_t translation_failed = 0;
  std::size_t parsed = 0;
  std::size_t unparsed = 0;
  std::array<std::size_t, 5> counts{};  // indexed like kScaleAscending
};

std::vector<ScaleRow> scale_table(const std::vector<LanguageOutcome>& outcomes);

// P(binary verdict | 5-point rating), pooled over languages. Only sentences
// with both a parsed rating and a parsed binary verdict count.
struct ConcordanceRow {
  Scale rating;
  std::size_t n = 0;
  std::size_t correct = 0;
  std::size_t incorrect = 0;
};

// Rows ordered Excellent .. Poor.
std::array<ConcordanceRow, 5> concordance(const std::vector<LanguageOutcome>& outcomes,
                                          BinaryMode mode);

// Percentages use two decimals; empty cells print as "-".
void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows,
                        BinaryMode mode, std::string_view manifest_hash);
void write_scale_csv(std::ostream& out, const std::vector<ScaleRow>& rows,
                     std::string_view manifest_hash);
void write_concordance_csv(std::ostream& out, const std::array<ConcordanceRow, 5>& zero_shot,
                           const std::array<ConcordanceRow, 5>& cot,
                           std::string_view manifest_hash);

}  // namespace tokequity::judge
