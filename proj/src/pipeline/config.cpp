#include "tokequity/pipeline/config.hpp"

#include <fmt/format.h>

#include <set>
#include <toml.hpp>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::pipeline {

namespace {

namespace fs = std::filesystem;

class Reader {
 public:
  Reader(const toml::table& doc, std::string source, fs::path base)
      : doc_(doc), source_(std::move(source)), base_(std::move(base)) {}

  const toml::table* table(std::string_view name, const std::set<std::string>& keys) {
    auto* node = doc_.get(name);
    if (!node) return nullptr;
    auto* t = node->as_table();
    if (!t) fail(std::string(name), "must be a table");
    for (const auto& [key, value] : *t) {
      if (!keys.contains(std::string(key.str()))) {
        fail(fmt::format("{}.{}", name, key.str()), "unknown key");
      }
    }
    return t;
  }

  void string(const toml::table* t, std::string_view table, std::string_view key,
              std::string& out) {
    if (!t || !t->contains(key)) return;
    auto v = (*t)[key].value<std::string>();
    if (!v) fail(qualified(table, key), "must be a string");
    out = *v;
  }

  void path(const toml::table* t, std::string_view table, std::string_view key, fs::path& out) {
    std::string s;
    string(t, table, key, s);
    if (!s.empty()) out = resolve(s);
  }

  template <typename T>
  void integer(const toml::table* t, std::string_view table, std::string_view key, T& out,
               std::int64_t min) {
    if (!t || !t->contains(key)) return;
    auto v = (*t)[key].value<std::int64_t>();
    if (!v || *v < min) fail(qualified(table, key), fmt::format("must be an integer >= {}", min));
    out = static_cast<T>(*v);
  }

  void real(const toml::table* t, std::string_view table, std::string_view key, double& out) {
    if (!t || !t->contains(key)) return;
    auto v = (*t)[key].value<double>();
    if (!v || !(*v > 0)) fail(qualified(table, key), "must be a positive number");
    out = *v;
  }

  void boolean(const toml::table* t, std::string_view table, std::string_view key, bool& out) {
    if (!t || !t->contains(key)) return;
    auto v = (*t)[key].value<bool>();
    if (!v) fail(qualified(table, key), "must be true or false");
    out = *v;
  }

  std::vector<std::string> strings(const toml::table* t, std::string_view table,
                                   std::string_view key) {
    std::vector<std::string> out;
    if (!t || !t->contains(key)) return out;
    auto* arr = (*t)[key].as_array();
    if (!arr) fail(qualified(table, key), "must be an array of strings");
    for (const auto& item : *arr) {
      auto v = item.value<std::string>();
      if (!v) fail(qualified(table, key), "must be an array of strings");
      out.push_back(*v);
    }
    return out;
  }

  fs::path resolve(const std::string& s) const {
    fs::path p(s);
    return p.is_relative() ? (base_ / p).lexically_normal() : p;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    throw ValidationError(fmt::format("{}: {} {}", source_, key, what));
  }

 private:
  static std::string qualified(std::string_view table, std::string_view key) {
    return fmt::format("{}.{}", table, key);
  }

  const toml::table& doc_;
  std::string source_;
  fs::path base_;
};

}  // namespace

Config parse_config(std::string_view content, const std::filesystem::path& source) {
  toml::table doc;
  try {
    doc = toml::parse(content, source.string());
  } catch (const toml::parse_error& e) {
    throw ValidationError(fmt::format("{}:{}: {}", source.string(), e.source().begin.line,
                                      e.description()));
  }
  for (const auto& [key, value] : doc) {
    static const std::set<std::string> kTables = {"corpus", "tokenizers", "impact",
                                                  "demographics", "select", "judge"};
    if (!kTables.contains(std::string(key.str()))) {
      throw ValidationError(
          fmt::format("{}: unknown section '{}'", source.string(), key.str()));
    }
  }

  Config c;
  c.source = source;
  Reader r(doc, source.string(), source.parent_path());

  auto* corpus = r.table("corpus", {"dir", "split", "english", "version", "languages"});
  r.path(corpus, "corpus", "dir", c.corpus.dir);
  r.string(corpus, "corpus", "split", c.corpus.split);
  r.string(corpus, "corpus", "english", c.corpus.english);
  r.string(corpus, "corpus", "version", c.corpus.version);
  c.corpus.languages = r.strings(corpus, "corpus", "languages");

  auto* tok = r.table("tokenizers", {"manifests"});
  for (const auto& m : r.strings(tok, "tokenizers", "manifests")) {
    c.tokenizers.push_back(r.resolve(m));
  }

  auto* impact = r.table("impact", {"tokenizer"});
  r.string(impact, "impact", "tokenizer", c.impact_tokenizer);

  auto* demo = r.table("demographics", {"speakers", "growth", "countries", "horizon",
                                        "snapshot", "mode", "preferred_variants"});
  r.path(demo, "demographics", "speakers", c.demographics.speakers);
  r.path(demo, "demographics", "growth", c.demographics.growth);
  r.path(demo, "demographics", "countries", c.demographics.countries);
  r.integer(demo, "demographics", "horizon", c.demographics.horizon, 1900);
  r.string(demo, "demographics", "snapshot", c.demographics.snapshot);
  r.string(demo, "demographics", "mode", c.demographics.mode);
  if (c.demographics.mode != "by-country-class" && c.demographics.mode != "by-language-wealth") {
    r.fail("demographics.mode", "expected by-country-class or by-language-wealth");
  }
  if (demo && demo->contains("preferred_variants")) {
    auto* pv = (*demo)["preferred_variants"].as_table();
    if (!pv) r.fail("demographics.preferred_variants", "must be a table");
    for (const auto& [iso, code] : *pv) {
      auto v = code.value<std::string>();
      if (!v) r.fail("demographics.preferred_variants." + std::string(iso.str()),
                     "must be a string");
      c.demographics.preferred_variants.emplace(std::string(iso.str()), *v);
    }
  }

  auto* sel = r.table("select", {"tokenizer", "top_premium", "top_population", "min_premium",
                                 "global_top"});
  r.string(sel, "select", "tokenizer", c.select.tokenizer);
  r.integer(sel, "select", "top_premium", c.select.top_premium, 0);
  r.integer(sel, "select", "top_population", c.select.top_population, 0);
  r.real(sel, "select", "min_premium", c.select.min_premium);
  r.integer(sel, "select", "global_top", c.select.global_top, 0);

  auto* judge = r.table("judge", {"endpoint", "translation_model", "judge_model", "concurrency",
                                  "max_retries", "initial_backoff_ms", "timeout_s", "names",
                                  "languages", "sentences", "sample", "mock_fixture"});
  r.string(judge, "judge", "endpoint", c.judge.endpoint);
  r.string(judge, "judge", "translation_model", c.judge.translation_model);
  r.string(judge, "judge", "judge_model", c.judge.judge_model);
  r.integer(judge, "judge", "concurrency", c.judge.concurrency, 1);
  r.integer(judge, "judge", "max_retries", c.judge.max_retries, 0);
  r.integer(judge, "judge", "initial_backoff_ms", c.judge.initial_backoff_ms, 0);
  r.integer(judge, "judge", "timeout_s", c.judge.timeout_s, 1);
  r.path(judge, "judge", "names", c.judge.names);
  c.judge.languages = r.strings(judge, "judge", "languages");
  r.integer(judge, "judge", "sentences", c.judge.sentences, 0);
  r.boolean(judge, "judge", "sample", c.judge.sample);
  r.path(judge, "judge", "mock_fixture", c.judge.mock_fixture);
  return c;
}

Config load_config(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw IoError(path.string() + ": config file not found");
  }
  return parse_config(util::read_file(path), path);
}

}  // namespace tokequity::pipeline
