#include "tokequity/judge/tables.hpp"

#include <fmt/format.h>

#include <ostream>

#include "tokequity/util/csv.hpp"

namespace tokequity::judge {

namespace {

std::string pct(std::size_t k, std::size_t n) {
  if (n == 0) return "-";
  return fmt::format("{:.2f}", 100.0 * static_cast<double>(k) / static_cast<double>(n));
}

Binary pick(const JudgeVerdict& v, BinaryMode mode) {
  return mode == BinaryMode::kZeroShot ? v.binary_zero_shot : v.binary_cot;
}

std::size_t scale_slot(Scale s) {
  for (std::size_t i = 0; i < kScaleAscending.size(); ++i) {
    if (kScaleAscending[i] == s) return i;
  }
  return kScaleAscending.size();
}

}  // namespace

std::string_view mode_name(BinaryMode m) {
  return m == BinaryMode::kZeroShot ? "zero_shot" : "cot";
}

double AccuracyRow::correct_pct() const {
  return parsed ? 100.0 * static_cast<double>(correct) / static_cast<double>(parsed) : 0.0;
}

double AccuracyRow::incorrect_pct() const {
  return parsed ? 100.0 * static_cast<double>(incorrect) / static_cast<double>(parsed) : 0.0;
}

std::vector<AccuracyRow> accuracy_table(const std::vector<LanguageOutcome>& outcomes,
                                        BinaryMode mode) {
  std::vector<AccuracyRow> rows;
  for (const auto& lang : outcomes) {
    AccuracyRow row;
    row.language = lang.code;
    row.name = lang.name;
    row.sentences = lang.sentences.size();
    for (const auto& s : lang.sentences) {
      if (!s.verdict) {
        ++row.translation_failed;
        continue;
      }
      switch (pick(*s.verdict, mode)) {
        case Binary::kCorrect:
          ++row.correct;
          ++row.parsed;
          break;
        case Binary::kIncorrect:
          ++row.incorrect;
          ++row.parsed;
          break;
        case Binary::kUnparsed:
          ++row.unparsed;
          break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ScaleRow> scale_table(const std::vector<LanguageOutcome>& outcomes) {
  std::vector<ScaleRow> rows;
  for (const auto& lang : outcomes) {
    ScaleRow row;
    row.language = lang.code;
    row.name = lang.name;
    row.sentences = lang.sentences.size();
    for (const auto& s : lang.sentences) {
      if (!s.verdict) {
        ++row.translation_failed;
        continue;
      }
      auto slot = scale_slot(s.verdict->scale);
      if (slot == kScaleAscending.size()) {
        ++row.unparsed;
      } else {
        ++row.counts[slot];
        ++row.parsed;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::array<ConcordanceRow, 5> concordance(const std::vector<LanguageOutcome>& outcomes,
                                          BinaryMode mode) {
  std::array<ConcordanceRow, 5> rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rating = kScaleAscending[kScaleAscending.size() - 1 - i];
  }
  for (const auto& lang : outcomes) {
    for (const auto& s : lang.sentences) {
      if (!s.verdict) continue;
      auto slot = scale_slot(s.verdict->scale);
      auto b = pick(*s.verdict, mode);
      if (slot == kScaleAscending.size() || b == Binary::kUnparsed) continue;
      auto& row = rows[kScaleAscending.size() - 1 - slot];
      ++row.n;
      ++(b == Binary::kCorrect ? row.correct : row.incorrect);
    }
  }
  return rows;
}

void write_accuracy_csv(std::ostream& out, const std::vector<AccuracyRow>& rows,
                        BinaryMode mode, std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"language", "name", "mode", "sentences", "translation_failed", "parsed", "unparsed",
         "incorrect_pct", "correct_pct", "flag"});
  for (const auto& r : rows) {
    w.row({r.language, r.name, std::string(mode_name(mode)), std::to_string(r.sentences),
           std::to_string(r.translation_failed), std::to_string(r.parsed),
           std::to_string(r.unparsed), pct(r.incorrect, r.parsed), pct(r.correct, r.parsed),
           r.flagged() ? "no_parsed_verdicts" : ""});
  }
}

void write_scale_csv(std::ostream& out, const std::vector<ScaleRow>& rows,
                     std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"language", "name", "sentences", "translation_failed", "parsed", "unparsed",
         "poor_pct", "fair_pct", "good_pct", "very_good_pct", "excellent_pct"});
  for (const auto& r : rows) {
    std::vector<std::string> row{r.language,
                                 r.name,
                                 std::to_string(r.sentences),
                                 std::to_string(r.translation_failed),
                                 std::to_string(r.parsed),
                                 std::to_string(r.unparsed)};
    for (auto c : r.counts) row.push_back(pct(c, r.parsed));
    w.row(row);
  }
}

void write_concordance_csv(std::ostream& out, const std::array<ConcordanceRow, 5>& zero_shot,
                           const std::array<ConcordanceRow, 5>& cot,
                           std::string_view manifest_hash) {
  util::CsvWriter w(out);
  w.comment("manifest_sha256: " + std::string(manifest_hash));
  w.row({"rating", "zero_shot_n", "zero_shot_incorrect_pct", "zero_shot_correct_pct", "cot_n",
         "cot_incorrect_pct", "cot_correct_pct"});
  for (std::size_t i = 0; i < zero_shot.size(); ++i) {
    const auto& z = zero_shot[i];
    const auto& c = cot[i];
    w.row({std::string(scale_name(z.rating)), std::to_string(z.n), pct(z.incorrect, z.n),
           pct(z.correct, z.n), std::to_string(c.n), pct(c.incorrect, c.n),
           pct(c.correct, c.n)});
  }
}

}  // namespace tokequity::judge
