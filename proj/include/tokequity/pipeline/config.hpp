#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace tokequity::pipeline {

// Relative paths in a config file resolve against the file's directory.
struct CorpusConfig {
  std::filesystem::path dir;
  std::string split = "dev";
  std::string english = "eng_Latn";
  std::string version;                 // free text, e.g. a dataset revision
  std::vector<std::string> languages;  // empty = every file in the split
};

struct DemographicsConfig {
  std::filesystem::path speakers;
  std::filesystem::path growth;
  std::filesystem::path countries;
  int horizon = 2022;
  std::string snapshot;  // indicator snapshot date
  std::string mode = "by-country-class";
  std::map<std::string, std::string> preferred_variants;  // iso -> corpus code
};

struct SelectConfig {
  std::string tokenizer;  // empty = first tokenizer
  std::size_t top_premium = 3;
  std::size_t top_population = 3;
  double min_premium = 4.0;
  std::size_t global_top = 5;
};

struct JudgeConfig {
  std::string endpoint;
  std::string translation_model;
  std::string judge_model;
  int concurrency = 4;
  int max_retries = 3;
  int initial_backoff_ms = 500;
  int timeout_s = 60;
  std::filesystem::path names;  // CSV code,name
  std::vector<std::string> languages;  // empty = selection.csv in the output dir
  std::size_t sentences = 0;           // per language; 0 = all
  bool sample = false;                 // random subset (uses --seed) instead of a prefix
  std::filesystem::path mock_fixture;  // serve canned responses in-process
};

struct Config {
  std::filesystem::path source;
  CorpusConfig corpus;
  std::vector<std::filesystem::path> tokenizers;  // manifests; first two drive the change report
  std::string impact_tokenizer;                   // empty = every tokenizer
  DemographicsConfig demographics;
  SelectConfig select;
  JudgeConfig judge;
};

Config parse_config(std::string_view content, const std::filesystem::path& source);
Config load_config(const std::filesystem::path& path);

}  // namespace tokequity::pipeline
