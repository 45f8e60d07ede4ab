#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tokequity/judge/runner.hpp"
#include "tokequity/pipeline/config.hpp"
#include "tokequity/pipeline/run_manifest.hpp"

namespace tokequity::pipeline {

struct Context {
  Config config;
  std::filesystem::path out = "out";
  std::uint64_t seed = 0;
  unsigned threads = 0;           // 0 = hardware concurrency
  std::ostream* progress = nullptr;  // human-readable notes, may be null
};

struct CommandResult {
  RunManifest manifest;
  std::vector<std::filesystem::path> written;
};

struct TokenizeOptions {
  std::filesystem::path tokenizer;  // manifest path; empty = first configured
  std::optional<std::string> text;
  std::filesystem::path input;  // one text per line
  bool ids = false;             // print ids, not only counts
  bool allow_special = false;
};

// Prints "<count>\t<ids...>" per input line to `out`.
void cmd_tokenize(const Context& ctx, const TokenizeOptions& options, std::ostream& out);

// premium_<tok>.csv/.json per tokenizer; premium_change.csv/.json when two or
// more tokenizers are configured (first = old, second = new).
CommandResult cmd_premium(const Context& ctx);

// profiles.csv plus impact_<tok>.csv/.json and orphans_<tok>.csv, reading the
// premium reports from the output directory.
CommandResult cmd_impact(const Context& ctx);

// selection.csv from a premium report and the demographic profiles.
CommandResult cmd_select(const Context& ctx);

struct JudgeOptions {
  // Testing aid: terminate the process abruptly right after this many log
  // records were appended (0 = never).
  std::size_t kill_after = 0;
};

// judge_log.jsonl plus accuracy_zero_shot.csv, accuracy_cot.csv,
// scale_distribution.csv and concordance.csv.
CommandResult cmd_judge(const Context& ctx, const JudgeOptions& options = {});

// Regenerates the judge tables from judge_log.jsonl without network access.
CommandResult cmd_report(const Context& ctx);

struct IndicatorOptions {
  std::filesystem::path cache_dir;
  bool offline = false;
  int first_growth_year = 2000;
};

// Fetches growth, GDP and income classes from the World Bank API into
// growth.csv and countries.csv in the output directory.
CommandResult cmd_indicators(const Context& ctx, const IndicatorOptions& options);

void write_judge_tables(const std::filesystem::path& out,
                        const std::vector<judge::LanguageOutcome>& outcomes,
                        const std::string& manifest_hash,
                        std::vector<std::filesystem::path>* written = nullptr);

}  // namespace tokequity::pipeline
