#include "tokequity/pipeline/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "tokequity/demographics/ingest.hpp"
#include "tokequity/demographics/worldbank.hpp"
#include "tokequity/error.hpp"
#include "tokequity/impact/bands.hpp"
#include "tokequity/impact/distribution.hpp"
#include "tokequity/judge/mock_server.hpp"
#include "tokequity/judge/prompts.hpp"
#include "tokequity/judge/tables.hpp"
#include "tokequity/pipeline/select.hpp"
#include "tokequity/premium/corpus.hpp"
#include "tokequity/premium/premium.hpp"
#include "tokequity/premium/report.hpp"
#include "tokequity/tokenizer/bpe.hpp"
#include "tokequity/tokenizer/manifest.hpp"
#include "tokequity/util/csv.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::pipeline {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kJudgeLog = "judge_log.jsonl";

unsigned thread_count(const Context& ctx) {
  if (ctx.threads) return ctx.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

void note(const Context& ctx, const std::string& text) {
  if (ctx.progress) *ctx.progress << text << '\n';
}

fs::path base_of(const Context& ctx) { return ctx.config.source.parent_path(); }

void emit(CommandResult& result, const fs::path& path, std::string_view content) {
  util::write_file(path, content);
  result.written.push_back(path);
}

void emit_manifest(const Context& ctx, CommandResult& result) {
  emit(result, ctx.out / fmt::format("manifest_{}.json", result.manifest.command),
       result.manifest.to_json());
}

template <typename Writer>
std::string render(Writer&& write) {
  std::ostringstream s;
  write(s);
  return s.str();
}

std::vector<tokenizer::TokenizerManifest> tokenizer_manifests(const Context& ctx) {
  if (ctx.config.tokenizers.empty()) {
    throw ValidationError(ctx.config.source.string() +
                          ": [tokenizers] manifests is empty; list at least one manifest");
  }
  std::vector<tokenizer::TokenizerManifest> out;
  for (const auto& p : ctx.config.tokenizers) {
    if (!fs::exists(p)) throw IoError(p.string() + ": tokenizer manifest not found");
    out.push_back(tokenizer::read_manifest(p));
  }
  return out;
}

void record_tokenizers(RunManifest& m, const std::vector<tokenizer::TokenizerManifest>& toks,
                       const fs::path& base) {
  for (std::size_t i = 0; i < toks.size(); ++i) {
    auto key = fmt::format("tokenizer.{}", i);
    m.set(key + ".name", toks[i].name);
    m.set_file(key + ".manifest", toks[i].source, base);
    m.set(key + ".vocabulary_sha256", util::sha256_file_hex(toks[i].vocabulary_path));
  }
  m.set("tokenizer.special_tokens", "disabled");
}

premium::ParallelCorpus load_corpus(const Context& ctx, std::vector<std::string> only) {
  const auto& c = ctx.config.corpus;
  if (c.dir.empty()) {
    throw ValidationError(ctx.config.source.string() + ": corpus.dir is not set");
  }
  if (!only.empty()) only.push_back(c.english);
  return premium::load_flores(c.dir, c.split, only);
}

void record_corpus(RunManifest& m, const Context& ctx, const premium::ParallelCorpus& corpus) {
  const auto& c = ctx.config.corpus;
  m.set("corpus.dir",
        fs::absolute(c.dir).lexically_relative(fs::absolute(base_of(ctx))).generic_string());
  m.set("corpus.split", c.split);
  m.set("corpus.version", c.version);
  m.set("corpus.english", c.english);
  m.set("corpus.languages", std::to_string(corpus.languages().size()));
  m.set("corpus.sentences", std::to_string(corpus.size()));
  m.set("corpus.fingerprint", corpus.fingerprint());
}

fs::path premium_report(const Context& ctx, const std::string& tokenizer) {
  auto path = ctx.out / fmt::format("premium_{}.csv", tokenizer);
  if (!fs::exists(path)) {
    throw DataGapError(path.string() + " not found; run the premium command first");
  }
  return path;
}

struct Demographics {
  std::vector<demographics::LanguageProfile> profiles;
  demographics::CountryTable countries;
};

Demographics load_demographics(const Context& ctx, RunManifest& m) {
  const auto& d = ctx.config.demographics;
  if (d.speakers.empty()) {
    throw ValidationError(ctx.config.source.string() + ": demographics.speakers is not set");
  }
  auto records = demographics::read_speakers_csv(d.speakers);
  if (records.empty()) {
    throw DataGapError(d.speakers.string() + ": no speaker records");
  }
  Demographics out;
  out.countries = demographics::load_country_table(d.growth, d.countries);
  out.profiles = demographics::build_profiles(records, out.countries, d.horizon);

  m.set_file("demographics.speakers", d.speakers, base_of(ctx));
  if (!d.growth.empty()) m.set_file("demographics.growth", d.growth, base_of(ctx));
  if (!d.countries.empty()) m.set_file("demographics.countries", d.countries, base_of(ctx));
  m.set("demographics.horizon", std::to_string(d.horizon));
  m.set("demographics.snapshot", d.snapshot);
  m.set("demographics.missing_indicator_policy", "drop_from_both_sums");
  m.set("demographics.wealth_thresholds", "1145.5,4515.5,14005.5");
  for (const auto& [iso, code] : d.preferred_variants) {
    m.set("demographics.preferred_variant." + iso, code);
  }
  m.set("demographics.variant_default", "alphabetical_first");
  return out;
}

std::string premium_plot_json(const std::vector<premium::PremiumRecord>& records,
                              std::string_view hash) {
  nlohmann::json doc;
  doc["manifest_sha256"] = hash;
  doc["tokenizer"] = records.empty() ? "" : records.front().tokenizer;
  auto& rows = doc["languages"] = nlohmann::json::array();
  for (const auto& r : records) {
    auto [lo, hi] = std::minmax_element(r.per_sentence_premiums.begin(),
                                        r.per_sentence_premiums.end());
    nlohmann::json row;
    row["language"] = r.language;
    row["premium"] = r.premium;
    row["total_tokens"] = r.total_tokens_lang;
    row["band"] = impact::band_of(r.premium).label;
    row["sentence_premium_min"] = lo == r.per_sentence_premiums.end() ? 0.0 : *lo;
    row["sentence_premium_max"] = hi == r.per_sentence_premiums.end() ? 0.0 : *hi;
    rows.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

// ---- judge plumbing -------------------------------------------------------

struct JudgePlan {
  RunManifest manifest;
  std::vector<judge::LanguageTask> tasks;
};

std::map<std::string, std::string> read_names(const fs::path& path) {
  std::map<std::string, std::string> out;
  if (path.empty()) return out;
  auto source = path.string();
  auto t = util::read_csv(path);
  auto c_code = t.require_column("code", source);
  auto c_name = t.require_column("name", source);
  for (const auto& row : t.rows) out[row[c_code]] = row[c_name];
  return out;
}

std::vector<std::size_t> pick_indices(std::size_t total, std::size_t wanted, bool sample,
                                      std::uint64_t seed) {
  std::vector<std::size_t> all(total);
  std::iota(all.begin(), all.end(), 0);
  if (wanted == 0 || wanted >= total) return all;
  if (!sample) {
    all.resize(wanted);
    return all;
  }
  // Partial Fisher-Yates with an explicit engine, so the subset depends only on
  // the seed and not on the standard library's distribution implementations.
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < wanted; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (total - i));
    std::swap(all[i], all[j]);
  }
  all.resize(wanted);
  std::sort(all.begin(), all.end());
  return all;
}

JudgePlan plan_judge(const Context& ctx) {
  const auto& j = ctx.config.judge;
  JudgePlan plan;
  auto& m = plan.manifest;
  m.command = "judge";

  auto codes = j.languages;
  if (codes.empty()) {
    auto selection = ctx.out / "selection.csv";
    if (!fs::exists(selection)) {
      throw ValidationError(
          "judge.languages is empty and " + selection.string() +
          " does not exist; list languages in the config or run the select command");
    }
    codes = read_selection_codes(selection.string());
    m.set_output_file("judge.selection", selection);
  }
  if (j.translation_model.empty() || j.judge_model.empty()) {
    throw ValidationError(ctx.config.source.string() +
                          ": judge.translation_model and judge.judge_model must be set");
  }
  auto corpus = load_corpus(ctx, codes);
  const auto& english = corpus.sentences(ctx.config.corpus.english);
  auto names = read_names(j.names);
  auto indices = pick_indices(corpus.size(), j.sentences, j.sample, ctx.seed);

  for (const auto& requested : codes) {
    auto code = corpus.resolve(requested);
    auto name = names.find(code);
    if (name == names.end()) name = names.find(premium::iso_of(code));
    if (name == names.end()) {
      throw ValidationError(fmt::format("no display name for {} in {}", code,
                                        j.names.empty() ? "judge.names (unset)" : j.names.string()));
    }
    judge::LanguageTask task{code, name->second, {}, {}};
    for (auto i : indices) {
      task.sentences.push_back(corpus.sentences(code)[i]);
      task.references.push_back(english[i]);
    }
    m.set("judge.language." + code, name->second);
    plan.tasks.push_back(std::move(task));
  }

  record_corpus(m, ctx, corpus);
  m.set("judge.translation_model", j.translation_model);
  m.set("judge.judge_model", j.judge_model);
  m.set("judge.temperature", "0");
  m.set("judge.sentences_per_language", std::to_string(indices.size()));
  m.set("judge.selection_rule", j.sample ? "seeded_sample" : "prefix");
  if (j.sample) m.set("judge.seed", std::to_string(ctx.seed));
  m.set("judge.user_content_template", judge::judge_user_content("{original}", "{translation}"));
  m.set("judge.prompt.translate_sha256", util::sha256_hex(judge::kTranslatePrompt));
  m.set("judge.prompt.binary_zero_shot_sha256", util::sha256_hex(judge::kBinaryZeroShotPrompt));
  m.set("judge.prompt.binary_cot_sha256", util::sha256_hex(judge::kBinaryChainOfThoughtPrompt));
  m.set("judge.prompt.scale_sha256", util::sha256_hex(judge::kScalePrompt));
  m.set("judge.translation_parse", "first_line_prefix_english");
  m.set("judge.rating_parse", "last_rating_marker");
  if (!j.mock_fixture.empty()) m.set_file("judge.mock_fixture", j.mock_fixture, base_of(ctx));
  m.set_runtime("judge.concurrency", std::to_string(j.concurrency));
  m.set_runtime("judge.max_retries", std::to_string(j.max_retries));
  return plan;
}

}  // namespace

// ---- tokenize -------------------------------------------------------------

void cmd_tokenize(const Context& ctx, const TokenizeOptions& options, std::ostream& out) {
  fs::path manifest = options.tokenizer;
  if (manifest.empty()) manifest = tokenizer_manifests(ctx).front().source;
  auto table = tokenizer::load_from_manifest(manifest);

  std::vector<std::string> lines;
  if (options.text) {
    lines.push_back(*options.text);
  } else if (!options.input.empty()) {
    lines = util::read_lines(options.input);
  } else {
    throw ValidationError("tokenize needs --text or --input");
  }
  for (const auto& line : lines) {
    auto seq = tokenizer::encode(line, table, {options.allow_special});
    out << seq.ids.size();
    if (options.ids) {
      out << '\t';
      for (std::size_t i = 0; i < seq.ids.size(); ++i) out << (i ? " " : "") << seq.ids[i];
    }
    out << '\n';
  }
}

// ---- premium --------------------------------------------------------------

CommandResult cmd_premium(const Context& ctx) {
  CommandResult result;
  auto& m = result.manifest;
  m.command = "premium";
  auto toks = tokenizer_manifests(ctx);
  auto corpus = load_corpus(ctx, ctx.config.corpus.languages);
  const auto& english = ctx.config.corpus.english;
  if (!corpus.contains(english)) {
    throw DataGapError(fmt::format("corpus has no {} file; premiums are relative to it",
                                   english));
  }
  record_corpus(m, ctx, corpus);
  record_tokenizers(m, toks, base_of(ctx));
  m.set("premium.definition", "ratio_of_corpus_token_totals");
  m.set("premium.normalization", "none");

  std::vector<std::vector<premium::PremiumRecord>> per_tok;
  for (const auto& t : toks) {
    note(ctx, fmt::format("tokenizing {} languages with {}", corpus.languages().size(), t.name));
    auto table = tokenizer::load_from_manifest(t);
    per_tok.push_back(premium::all_premiums(corpus, table, english, thread_count(ctx)));
  }
  auto hash = m.content_hash();

  std::map<std::string, double> change_pct;
  if (toks.size() >= 2) {
    auto changes = premium::premium_changes(per_tok[0], per_tok[1]);
    auto summary = premium::summarize_changes(changes, english);
    for (const auto& c : changes) change_pct[c.language] = c.change_pct;
    emit(result, ctx.out / "premium_change.csv", render([&](std::ostream& s) {
           premium::write_change_csv(s, changes, toks[0].name, toks[1].name, hash);
         }));
    nlohmann::json doc;
    doc["manifest_sha256"] = hash;
    doc["old_tokenizer"] = toks[0].name;
    doc["new_tokenizer"] = toks[1].name;
    doc["languages"] = summary.languages;
    doc["median_change_pct"] = summary.median_change_pct;
    doc["mean_change_pct"] = summary.mean_change_pct;
    doc["increased"] = summary.increased;
    auto& rows = doc["changes"] = nlohmann::json::array();
    for (const auto& c : changes) {
      rows.push_back({{"language", c.language},
                      {"premium_old", c.premium_old},
                      {"premium_new", c.premium_new},
                      {"change_pct", c.change_pct}});
    }
    emit(result, ctx.out / "premium_change.json", doc.dump(2) + "\n");
  }
  for (std::size_t i = 0; i < toks.size(); ++i) {
    // The change column belongs to the newer tokenizer's report.
    static const std::map<std::string, double> kNone;
    const auto& pct = (i == 1) ? change_pct : kNone;
    emit(result, ctx.out / fmt::format("premium_{}.csv", toks[i].name),
         render([&](std::ostream& s) { premium::write_premium_csv(s, per_tok[i], pct, hash); }));
    emit(result, ctx.out / fmt::format("premium_{}.json", toks[i].name),
         premium_plot_json(per_tok[i], hash));
  }
  emit_manifest(ctx, result);
  return result;
}

// ---- impact ---------------------------------------------------------------

CommandResult cmd_impact(const Context& ctx) {
  CommandResult result;
  auto& m = result.manifest;
  m.command = "impact";
  auto demo = load_demographics(ctx, m);
  auto mode = impact::parse_mode(ctx.config.demographics.mode);
  m.set("impact.mode", std::string(impact::mode_name(mode)));
  std::string bands;
  for (const auto& b : impact::kBands) bands += (bands.empty() ? "" : " ") + std::string(b.label);
  m.set("impact.bands", bands);

  std::vector<std::string> names;
  if (!ctx.config.impact_tokenizer.empty()) {
    names.push_back(ctx.config.impact_tokenizer);
  } else {
    for (const auto& t : tokenizer_manifests(ctx)) names.push_back(t.name);
  }
  std::vector<std::pair<std::string, std::vector<premium::PremiumRecord>>> reports;
  for (const auto& name : names) {
    auto path = premium_report(ctx, name);
    m.set_output_file("impact.premium_report." + name, path);
    reports.emplace_back(name, premium::read_premium_csv(path));
  }
  auto hash = m.content_hash();

  emit(result, ctx.out / "profiles.csv", render([&](std::ostream& s) {
         util::CsvWriter(s).comment("manifest_sha256: " + hash);
         demographics::write_profiles_csv(s, demo.profiles);
       }));
  for (const auto& [name, records] : reports) {
    auto premiums = impact::premiums_by_iso(records, ctx.config.demographics.preferred_variants);
    auto matrix = impact::population_distribution(demo.profiles, demo.countries, premiums, mode);
    emit(result, ctx.out / fmt::format("impact_{}.csv", name),
         render([&](std::ostream& s) { impact::write_impact_csv(s, matrix, hash); }));
    emit(result, ctx.out / fmt::format("impact_{}.json", name),
         impact::impact_plot_json(matrix, name, hash));
    emit(result, ctx.out / fmt::format("orphans_{}.csv", name), render([&](std::ostream& s) {
           util::CsvWriter w(s);
           w.comment("manifest_sha256: " + hash);
           w.row({"language", "kind"});
           for (const auto& o : matrix.orphans) w.row({o, "premium_without_demographics"});
           for (const auto& u : matrix.unmeasured) w.row({u, "demographics_without_premium"});
         }));
    if (matrix.unclassified > 0) {
      note(ctx, fmt::format("{}: {:.0f} speakers sit in countries without an income class; "
                            "add countries.csv (see the indicators command)",
                            name, matrix.unclassified));
    }
    if (!matrix.orphans.empty()) {
      note(ctx, fmt::format("{}: {} languages have a premium but no speaker data (see orphans_{}.csv)",
                            name, matrix.orphans.size(), name));
    }
  }
  emit_manifest(ctx, result);
  return result;
}

// ---- select ---------------------------------------------------------------

CommandResult cmd_select(const Context& ctx) {
  CommandResult result;
  auto& m = result.manifest;
  m.command = "select";
  auto demo = load_demographics(ctx, m);
  auto tok = ctx.config.select.tokenizer;
  if (tok.empty()) tok = tokenizer_manifests(ctx).front().name;
  auto path = premium_report(ctx, tok);
  m.set_output_file("select.premium_report", path);

  const auto& sc = ctx.config.select;
  SelectionRules rules;
  rules.top_premium = sc.top_premium;
  rules.top_population = sc.top_population;
  rules.min_premium = sc.min_premium;
  rules.global_top = sc.global_top;
  rules.exclude = ctx.config.corpus.english;
  m.set("select.tokenizer", tok);
  m.set("select.rules", fmt::format("tiers=low,lower_middle top_premium={} top_population={} "
                                    "min_premium={} global_top={} exclude={}",
                                    rules.top_premium, rules.top_population, rules.min_premium,
                                    rules.global_top, rules.exclude));

  auto records = premium::read_premium_csv(path);
  std::map<std::string, double> by_code;
  for (const auto& r : records) by_code[r.language] = r.premium;
  std::map<std::string, const demographics::LanguageProfile*> profiles;
  for (const auto& p : demo.profiles) profiles[p.language] = &p;

  std::vector<Candidate> candidates;
  for (const auto& [iso, code] :
       impact::chosen_variants(records, ctx.config.demographics.preferred_variants)) {
    auto p = profiles.find(iso);
    if (p == profiles.end()) continue;  // orphan: no speaker data to rank by
    candidates.push_back({code, iso, by_code.at(code), p->second->total_speakers,
                          p->second->wealth_class});
  }
  auto selected = select_languages(candidates, rules);
  auto hash = m.content_hash();
  emit(result, ctx.out / "selection.csv",
       render([&](std::ostream& s) { write_selection_csv(s, selected, hash); }));
  note(ctx, fmt::format("selected {} languages", selected.size()));
  emit_manifest(ctx, result);
  return result;
}

// ---- judge ----------------------------------------------------------------

void write_judge_tables(const fs::path& out, const std::vector<judge::LanguageOutcome>& outcomes,
                        const std::string& hash, std::vector<fs::path>* written) {
  using judge::BinaryMode;
  auto put = [&](const std::string& name, const std::string& content) {
    util::write_file(out / name, content);
    if (written) written->push_back(out / name);
  };
  for (auto mode : {BinaryMode::kZeroShot, BinaryMode::kChainOfThought}) {
    put(fmt::format("accuracy_{}.csv", judge::mode_name(mode)), render([&](std::ostream& s) {
          judge::write_accuracy_csv(s, judge::accuracy_table(outcomes, mode), mode, hash);
        }));
  }
  put("scale_distribution.csv", render([&](std::ostream& s) {
        judge::write_scale_csv(s, judge::scale_table(outcomes), hash);
      }));
  put("concordance.csv", render([&](std::ostream& s) {
        judge::write_concordance_csv(s, judge::concordance(outcomes, BinaryMode::kZeroShot),
                                     judge::concordance(outcomes, BinaryMode::kChainOfThought),
                                     hash);
      }));
}

CommandResult cmd_judge(const Context& ctx, const JudgeOptions& options) {
  const auto& j = ctx.config.judge;
  auto plan = plan_judge(ctx);
  CommandResult result{std::move(plan.manifest), {}};
  auto& m = result.manifest;

  std::unique_ptr<judge::MockChatServer> mock;
  judge::HttpChatOptions http;
  http.endpoint = j.endpoint;
  if (!j.mock_fixture.empty()) {
    mock = std::make_unique<judge::MockChatServer>(judge::load_mock_fixture(j.mock_fixture));
    mock->start();
    http.endpoint = mock->endpoint();
    m.set_runtime("judge.endpoint", "in-process mock");
  } else {
    m.set_runtime("judge.endpoint", j.endpoint);
  }
  http.retry.max_retries = j.max_retries;
  http.retry.initial_backoff = std::chrono::milliseconds(j.initial_backoff_ms);
  http.retry.timeout = std::chrono::seconds(j.timeout_s);
  judge::HttpChatClient client(http);

  fs::create_directories(ctx.out);
  judge::RunLog log(ctx.out / std::string(kJudgeLog));
  m.set_runtime("judge.log_lines_at_start", std::to_string(log.lines_read()));
  judge::JudgeRunner runner(&client, log,
                            {j.translation_model, j.judge_model, j.concurrency});
  std::atomic<std::size_t> appended{0};
  if (options.kill_after > 0) {
    runner.on_logged = [&](const judge::RunRecord&) {
      if (++appended == options.kill_after) std::_Exit(75);
    };
  }
  note(ctx, fmt::format("judging {} languages x {} sentences", plan.tasks.size(),
                        plan.tasks.empty() ? 0 : plan.tasks.front().sentences.size()));
  auto outcomes = runner.run(plan.tasks);
  m.set_runtime("judge.calls_made", std::to_string(runner.calls_made()));

  result.written.push_back(log.path());
  write_judge_tables(ctx.out, outcomes, m.content_hash(), &result.written);
  emit_manifest(ctx, result);
  return result;
}

CommandResult cmd_report(const Context& ctx) {
  auto log_path = ctx.out / std::string(kJudgeLog);
  if (!fs::exists(log_path)) {
    throw DataGapError(log_path.string() + " not found; run the judge command first");
  }
  auto plan = plan_judge(ctx);
  CommandResult result{std::move(plan.manifest), {}};
  auto& m = result.manifest;
  judge::RunLog log(log_path);
  judge::JudgeRunner runner(nullptr, log, {ctx.config.judge.translation_model,
                                           ctx.config.judge.judge_model, 1});
  auto outcomes = runner.run(plan.tasks);
  m.set_runtime("report.source", "judge_log");
  write_judge_tables(ctx.out, outcomes, m.content_hash(), &result.written);
  // Same content hash as the judge run, so regenerated tables are identical.
  emit(result, ctx.out / "manifest_report.json", m.to_json());
  return result;
}

// ---- indicators -----------------------------------------------------------

CommandResult cmd_indicators(const Context& ctx, const IndicatorOptions& options) {
  CommandResult result;
  auto& m = result.manifest;
  m.command = "indicators";
  demographics::WorldBankOptions wb;
  wb.cache_dir = options.cache_dir;
  wb.offline = options.offline;
  demographics::WorldBankClient client(wb);
  auto horizon = ctx.config.demographics.horizon;
  auto table = client.country_table(options.first_growth_year, horizon);
  m.set("indicators.source", wb.base_url);
  m.set("indicators.gdp", std::string(demographics::kGdpPerCapitaIndicator));
  m.set("indicators.growth", std::string(demographics::kPopulationGrowthIndicator));
  m.set("indicators.years", fmt::format("{}-{}", options.first_growth_year, horizon));
  m.set_runtime("indicators.network_requests", std::to_string(client.network_requests()));
  fs::create_directories(ctx.out);
  demographics::write_growth_csv(ctx.out / "growth.csv", table);
  demographics::write_countries_csv(ctx.out / "countries.csv", table);
  result.written = {ctx.out / "growth.csv", ctx.out / "countries.csv"};
  m.set_output_file("indicators.growth_csv", ctx.out / "growth.csv");
  m.set_output_file("indicators.countries_csv", ctx.out / "countries.csv");
  emit_manifest(ctx, result);
  return result;
}

}  // namespace tokequity::pipeline
