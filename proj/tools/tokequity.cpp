// tokequity: tokenization-premium pipeline driver.
//
//   tokequity --config run.toml --out out premium
//   tokequity --config run.toml --out out impact
//   tokequity --config run.toml --out out select
//   tokequity --config run.toml --out out judge
//   tokequity --config run.toml --out out report
//   tokequity tokenize --tokenizer data/vocab/cl100k_base.toml --text "hello" --ids
//
// Exit codes: 0 ok, 2 validation or I/O, 3 data gap, 4 transport.

#include <CLI11.hpp>

#include <iostream>

#include "tokequity/error.hpp"
#include "tokequity/pipeline/commands.hpp"

namespace {

using namespace tokequity;

int run(int argc, char** argv) {
  CLI::App app{"Tokenization premium, demographic impact and back-translation judge pipeline"};
  app.set_version_flag("--version", std::string(pipeline::kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool quiet = false;
  app.add_option("--config", config_path, "TOML run configuration")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--seed", seed, "Seed for any sampling")->capture_default_str();
  app.add_option("--threads", threads, "Tokenizer threads (0 = all cores)");
  app.add_flag("-q,--quiet", quiet, "No progress notes on stderr");

  pipeline::TokenizeOptions tok;
  std::string tok_manifest, tok_input, tok_text;
  auto* tokenize = app.add_subcommand("tokenize", "Print token counts (and ids) per input line");
  tokenize->add_option("--tokenizer", tok_manifest, "Tokenizer manifest (.toml)");
  auto* text_opt = tokenize->add_option("--text", tok_text, "Text to encode");
  tokenize->add_option("--input", tok_input, "File with one text per line")
      ->excludes(text_opt)
      ->check(CLI::ExistingFile);
  tokenize->add_flag("--ids", tok.ids, "Print token ids after the count");
  tokenize->add_flag("--allow-special", tok.allow_special, "Match special-token literals");

  auto* premium = app.add_subcommand("premium", "Token premiums vs English per tokenizer");
  auto* impact = app.add_subcommand("impact", "Population per income class and premium band");
  auto* select = app.add_subcommand("select", "Derive the evaluation language list");

  pipeline::JudgeOptions judge_opts;
  auto* judge = app.add_subcommand("judge", "Back-translation with LLM-as-judge (resumable)");
  judge->add_option("--simulate-kill-after", judge_opts.kill_after)->group("");  // test aid

  auto* report = app.add_subcommand("report", "Rebuild judge tables from the run log, offline");

  pipeline::IndicatorOptions ind;
  std::string cache_dir;
  auto* indicators =
      app.add_subcommand("indicators", "Fetch growth, GDP and income classes (World Bank)");
  indicators->add_option("--cache", cache_dir, "Response cache directory");
  indicators->add_flag("--offline", ind.offline, "Serve from the cache only");
  indicators->add_option("--first-year", ind.first_growth_year, "First growth year")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  pipeline::Context ctx;
  ctx.out = out_dir;
  ctx.seed = seed;
  ctx.threads = threads;
  ctx.progress = quiet ? nullptr : &std::cerr;
  bool needs_config = !tokenize->parsed() || tok_manifest.empty();
  if (!config_path.empty()) {
    ctx.config = pipeline::load_config(config_path);
  } else if (needs_config) {
    throw ValidationError("--config is required for this command");
  }

  if (tokenize->parsed()) {
    tok.tokenizer = tok_manifest;
    tok.input = tok_input;
    if (text_opt->count()) tok.text = tok_text;
    pipeline::cmd_tokenize(ctx, tok, std::cout);
    return 0;
  }
  pipeline::CommandResult result;
  if (premium->parsed()) result = pipeline::cmd_premium(ctx);
  if (impact->parsed()) result = pipeline::cmd_impact(ctx);
  if (select->parsed()) result = pipeline::cmd_select(ctx);
  if (judge->parsed()) result = pipeline::cmd_judge(ctx, judge_opts);
  if (report->parsed()) result = pipeline::cmd_report(ctx);
  if (indicators->parsed()) {
    ind.cache_dir = cache_dir.empty() ? std::filesystem::path(out_dir) / "worldbank_cache"
                                      : std::filesystem::path(cache_dir);
    result = pipeline::cmd_indicators(ctx, ind);
  }
  if (!quiet) {
    for (const auto& p : result.written) std::cerr << "wrote " << p.string() << '\n';
    std::cerr << "manifest " << result.manifest.content_hash() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const tokequity::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tokequity::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
