#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "test_support.hpp"
#include "tokequity/premium/corpus.hpp"
#include "tokequity/premium/premium.hpp"
#include "tokequity/premium/report.hpp"
#include "tokequity/tokenizer/manifest.hpp"

namespace tokequity::premium {
namespace {

using tokenizer::Vocabulary;

Vocabulary toy() {
  return tokenizer::parse_vocabulary("YQ== 0\nYg== 1\nYWI= 2\n", R"( ?\p{L}+|\s+)", "toy",
                                     "toy", {.require_base_bytes = false});
}

const Vocabulary& cl100k() {
  static const Vocabulary v =
      tokenizer::load_from_manifest(testing::repo_data("vocab/cl100k_base.toml"));
  return v;
}

const Vocabulary& o200k() {
  static const Vocabulary v =
      tokenizer::load_from_manifest(testing::repo_data("vocab/o200k_base.toml"));
  return v;
}

const ParallelCorpus& names_corpus() {
  static const ParallelCorpus c = load_flores(testing::repo_data("corpus/cldr-names"));
  return c;
}

TEST(PremiumPair, IdenticalCorporaIsOne) {
  std::vector<std::string> s{"abab", "ba"};
  EXPECT_EQ(premium_pair(s, s, toy()), 1.0);
}

TEST(PremiumPair, RatioOfTotals) {
  // 3 + 5 tokens over 2 + 2 tokens.
  std::vector<std::string> a{"aaa", "aaaaa"};
  std::vector<std::string> b{"aa", "bb"};
  EXPECT_EQ(premium_pair(a, b, toy()), 2.0);
  EXPECT_EQ(premium_pair(b, a, toy()), 0.5);
}

TEST(PremiumPair, LengthMismatchRejected) {
  std::vector<std::string> a{"a"};
  std::vector<std::string> b{"a", "b"};
  EXPECT_THROW(premium_pair(a, b, toy()), Error);
}

TEST(PremiumPair, EmptyDenominatorRejected) {
  std::vector<std::string> none;
  EXPECT_THROW(premium_pair(none, none, toy()), Error);
}

TEST(PremiumVsEnglish, EnglishIsExactlyOne) {
  for (const auto* v : {&cl100k(), &o200k()}) {
    auto r = premium_vs_english(names_corpus(), "eng", *v);
    EXPECT_EQ(r.premium, 1.0);
    EXPECT_EQ(r.language, "eng_Latn");
    EXPECT_EQ(r.tokenizer, v->name());
  }
}

TEST(PremiumVsEnglish, RecordFields) {
  auto r = premium_vs_english(names_corpus(), "tel", cl100k());
  EXPECT_EQ(r.language, "tel_Telu");
  EXPECT_EQ(r.premium, static_cast<double>(r.total_tokens_lang) /
                           static_cast<double>(r.total_tokens_eng));
  EXPECT_EQ(r.per_sentence_premiums.size(), names_corpus().size());
  EXPECT_GT(r.premium, 1.0);
}

TEST(PremiumChange, Examples) {
  EXPECT_EQ(premium_change(3.0, 3.0), 0.0);
  EXPECT_EQ(premium_change(2.0, 3.0), 50.0);
  EXPECT_THROW(premium_change(0.0, 1.0), Error);
}

// The printed Table 5 changes were computed from unrounded premiums, so the
// two-decimal premiums reproduce them only to within rounding.
TEST(PremiumChange, PublishedRowsWithinRoundingOfPrintedPremiums) {
  struct Row {
    double p_old, p_new, printed;
  };
  for (auto [p_old, p_new, printed] : {Row{4.82, 1.59, -67.08}, Row{12.96, 13.93, 7.44}}) {
    double lo = premium_change(p_old + 0.005, p_new - 0.005);
    double hi = premium_change(p_old - 0.005, p_new + 0.005);
    EXPECT_GE(printed, lo);
    EXPECT_LE(printed, hi);
  }
  EXPECT_NEAR(premium_change(4.82, 1.59), -67.01, 0.005);
  EXPECT_NEAR(premium_change(12.96, 13.93), 7.48, 0.005);
}

TEST(Property, Reciprocity) {
  const auto& langs = names_corpus().languages();
  for (const auto& [a, sa] : langs) {
    for (const auto& [b, sb] : langs) {
      double ab = premium_pair(sa, sb, cl100k());
      double ba = premium_pair(sb, sa, cl100k());
      EXPECT_NEAR(ab * ba, 1.0, 1e-12) << a << " " << b;
    }
  }
}

TEST(Property, AggregateWithinPerSentenceRange) {
  for (const auto* v : {&cl100k(), &o200k()}) {
    for (const auto& r : all_premiums(names_corpus(), *v)) {
      auto [lo, hi] = std::minmax_element(r.per_sentence_premiums.begin(),
                                          r.per_sentence_premiums.end());
      EXPECT_GE(r.premium, *lo) << r.language;
      EXPECT_LE(r.premium, *hi) << r.language;
    }
  }
}

TEST(Property, EnglishBaselineForEveryTokenizer) {
  for (const auto* v : {&cl100k(), &o200k()}) {
    for (const auto& r : all_premiums(names_corpus(), *v)) {
      if (r.language == "eng_Latn") {
        EXPECT_EQ(r.premium, 1.0);
      }
      EXPECT_GT(r.premium, 0.0);
    }
  }
}

TEST(AllPremiums, MatchesOneByOne) {
  auto all = all_premiums(names_corpus(), cl100k(), kEnglish, 4);
  ASSERT_EQ(all.size(), names_corpus().languages().size());
  for (const auto& r : all) {
    auto one = premium_vs_english(names_corpus(), r.language, cl100k());
    EXPECT_EQ(one.premium, r.premium);
  }
}

TEST(Changes, SummaryExcludesEnglish) {
  std::vector<PremiumRecord> old_r{{"eng_Latn", "a", 10, 10, 1.0, {}},
                                   {"xxx_Latn", "a", 40, 10, 4.0, {}},
                                   {"yyy_Latn", "a", 20, 10, 2.0, {}},
                                   {"zzz_Latn", "a", 50, 10, 5.0, {}}};
  std::vector<PremiumRecord> new_r{{"zzz_Latn", "b", 60, 10, 6.0, {}},
                                   {"eng_Latn", "b", 10, 10, 1.0, {}},
                                   {"xxx_Latn", "b", 20, 10, 2.0, {}},
                                   {"yyy_Latn", "b", 15, 10, 1.5, {}}};
  auto changes = premium_changes(old_r, new_r);
  ASSERT_EQ(changes.size(), 4u);
  EXPECT_EQ(changes[1].language, "xxx_Latn");
  EXPECT_EQ(changes[1].change_pct, -50.0);
  auto s = summarize_changes(changes);
  EXPECT_EQ(s.languages, 3u);
  EXPECT_EQ(s.median_change_pct, -25.0);
  EXPECT_EQ(s.mean_change_pct, (-50.0 - 25.0 + 20.0) / 3.0);
  EXPECT_EQ(s.increased, std::vector<std::string>{"zzz_Latn"});

  new_r.pop_back();
  EXPECT_THROW(premium_changes(old_r, new_r), Error);
}

TEST(Corpus, MisalignedNamesBothFiles) {
  testing::TempDir dir;
  util::write_file(dir / "eng_Latn.dev", "one\ntwo\n");
  util::write_file(dir / "fra_Latn.dev", "un\n");
  try {
    load_flores(dir.path());
    FAIL();
  } catch (const Error& e) {
    std::string what = e.what();
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
    EXPECT_NE(what.find("eng_Latn.dev"), std::string::npos) << what;
    EXPECT_NE(what.find("fra_Latn.dev"), std::string::npos) << what;
  }
}

TEST(Corpus, EmptySentenceRejected) {
  EXPECT_THROW(ParallelCorpus({{"eng_Latn", {"a", ""}}, {"fra_Latn", {"b", "c"}}}), Error);
}

TEST(Corpus, ResolveByIso) {
  ParallelCorpus c({{"eng_Latn", {"a"}}, {"zho_Hans", {"b"}}, {"zho_Hant", {"c"}}});
  EXPECT_EQ(c.resolve("eng"), "eng_Latn");
  EXPECT_EQ(c.resolve("zho_Hant"), "zho_Hant");
  EXPECT_THROW(c.resolve("zho"), Error);
  EXPECT_THROW(c.resolve("fra"), Error);
  EXPECT_EQ(iso_of("zho_Hans"), "zho");
}

TEST(Corpus, SplitSubdirectoryAndFilter) {
  testing::TempDir dir;
  std::filesystem::create_directories(dir / "devtest");
  util::write_file(dir / "devtest/eng_Latn.devtest", "one\ntwo\n");
  util::write_file(dir / "devtest/fra_Latn.devtest", "un\ndeux\n");
  util::write_file(dir / "devtest/deu_Latn.devtest", "eins\nzwei\n");
  auto c = load_flores(dir.path(), "devtest", {"eng", "fra"});
  EXPECT_EQ(c.languages().size(), 2u);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.sentences("fra_Latn")[1], "deux");
  auto all = load_flores(dir.path(), "devtest");
  EXPECT_NE(all.fingerprint(), c.fingerprint());
  EXPECT_EQ(load_flores(dir.path(), "devtest").fingerprint(), all.fingerprint());
}

TEST(Corpus, MissingDirectory) {
  try {
    load_flores("/nonexistent/flores");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
  }
}

TEST(Report, CsvRoundTrip) {
  auto records = all_premiums(names_corpus(), cl100k());
  std::ostringstream out;
  write_premium_csv(out, records, {{"hin_Deva", -12.345}}, "abc123");
  EXPECT_TRUE(out.str().starts_with("# manifest_sha256: abc123\n"));
  EXPECT_NE(out.str().find(",-12.35\n"), std::string::npos);
  testing::TempDir dir;
  util::write_file(dir / "p.csv", out.str());
  auto back = read_premium_csv(dir / "p.csv");
  ASSERT_EQ(back.size(), records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].language, records[i].language);
    EXPECT_EQ(back[i].total_tokens_lang, records[i].total_tokens_lang);
    EXPECT_NEAR(back[i].premium, records[i].premium, 5e-7);
  }
}

TEST(Report, ChangeCsvColumns) {
  std::ostringstream out;
  write_change_csv(out, {{"hin_Deva", 4.82, 1.59, premium_change(4.82, 1.59)}}, "cl100k_base",
                   "o200k_base", "h");
  EXPECT_EQ(out.str(),
            "# manifest_sha256: h\n"
            "language,premium_cl100k_base,premium_o200k_base,change_pct\n"
            "hin_Deva,4.82,1.59,-67.01\n");
}

}  // namespace
}  // namespace tokequity::premium
