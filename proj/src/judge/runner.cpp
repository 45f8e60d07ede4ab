#include "tokequity/judge/runner.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "tokequity/error.hpp"
#include "tokequity/judge/prompts.hpp"

namespace tokequity::judge {

std::string_view status_name(TranslationStatus s) {
  switch (s) {
    case TranslationStatus::kOk:
      return "ok";
    case TranslationStatus::kParseFailed:
      return "parse_failed";
    case TranslationStatus::kApiFailed:
      return "api_failed";
  }
  return "?";
}

JudgeRunner::JudgeRunner(ChatClient* client, RunLog& log, JudgeSettings settings)
    : client_(client), log_(log), settings_(std::move(settings)) {
  if (settings_.concurrency < 1) throw ValidationError("concurrency must be at least 1");
}

JudgeRunner::CallResult JudgeRunner::call(
    Phase phase, const std::string& language, std::size_t index, const ChatRequest& request,
    const std::function<std::pair<std::string, std::string>(const std::string&)>& parse) {
  auto hash = request_hash(request);
  auto phase_str = std::string(phase_name(phase));
  if (auto prior = log_.find(phase_str, language, index);
      prior && prior->request_hash == hash && prior->status != "api_failed") {
    return {prior->raw_response, false};
  }
  if (client_ == nullptr) return {"", true};

  RunRecord rec;
  rec.phase = phase_str;
  rec.language = language;
  rec.index = index;
  rec.request_hash = hash;
  CallResult result;
  try {
    ++calls_made_;
    result.raw = client_->complete(request);
    auto [parsed, status] = parse(result.raw);
    rec.raw_response = result.raw;
    rec.parsed = std::move(parsed);
    rec.status = std::move(status);
  } catch (const AuthError&) {
    throw;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kTransport) throw;
    rec.status = "api_failed";
    rec.error = e.what();
    result.api_failed = true;
  }
  rec.timestamp = utc_timestamp();
  log_.append(rec);
  if (on_logged) on_logged(rec);
  return result;
}

SentenceOutcome JudgeRunner::process(const LanguageTask& task, std::size_t index) {
  SentenceOutcome out;
  auto& tr = out.translation;
  tr.language = task.code;
  tr.index = index;

  ChatRequest translate{settings_.translation_model, translation_prompt(task.name),
                        task.sentences[index], 0.0};
  auto t = call(Phase::kTranslate, task.code, index, translate, [](const std::string& raw) {
    auto parsed = parse_translation(raw);
    return parsed ? std::pair{*parsed, std::string("ok")}
                  : std::pair{std::string(), std::string("parse_failed")};
  });
  if (t.api_failed) {
    tr.status = TranslationStatus::kApiFailed;
    return out;
  }
  tr.raw_response = t.raw;
  auto parsed = parse_translation(t.raw);
  if (!parsed) {
    tr.status = TranslationStatus::kParseFailed;
    return out;
  }
  tr.translation = *parsed;
  tr.status = TranslationStatus::kOk;

  auto content = judge_user_content(task.references[index], tr.translation);
  auto binary_parse = [](const std::string& raw) {
    auto v = parse_binary(raw);
    return std::pair{std::string(binary_name(v)),
                     std::string(v == Binary::kUnparsed ? "parse_failed" : "ok")};
  };
  auto scale_parse = [](const std::string& raw) {
    auto v = parse_scale(raw);
    return std::pair{std::string(scale_name(v)),
                     std::string(v == Scale::kUnparsed ? "parse_failed" : "ok")};
  };

  JudgeVerdict v;
  v.index = index;
  auto zs = call(Phase::kBinaryZeroShot, task.code, index,
                 {settings_.judge_model, std::string(kBinaryZeroShotPrompt), content, 0.0},
                 binary_parse);
  auto cot = call(Phase::kBinaryChainOfThought, task.code, index,
                  {settings_.judge_model, std::string(kBinaryChainOfThoughtPrompt), content, 0.0},
                  binary_parse);
  auto sc = call(Phase::kScale, task.code, index,
                 {settings_.judge_model, std::string(kScalePrompt), content, 0.0}, scale_parse);
  // A failed judge call stays Unparsed; it is never coerced into a verdict.
  v.zero_shot_raw = zs.raw;
  v.cot_raw = cot.raw;
  v.scale_raw = sc.raw;
  v.binary_zero_shot = zs.api_failed ? Binary::kUnparsed : parse_binary(zs.raw);
  v.binary_cot = cot.api_failed ? Binary::kUnparsed : parse_binary(cot.raw);
  v.scale = sc.api_failed ? Scale::kUnparsed : parse_scale(sc.raw);
  out.verdict = std::move(v);
  return out;
}

std::vector<LanguageOutcome> JudgeRunner::run(const std::vector<LanguageTask>& tasks) {
  std::vector<LanguageOutcome> out(tasks.size());
  std::vector<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t l = 0; l < tasks.size(); ++l) {
    const auto& task = tasks[l];
    if (task.sentences.size() != task.references.size()) {
      throw ValidationError(task.code + ": sentences and English references differ in count");
    }
    out[l].code = task.code;
    out[l].name = task.name;
    out[l].sentences.resize(task.sentences.size());
    for (std::size_t i = 0; i < task.sentences.size(); ++i) work.emplace_back(l, i);
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (!stop) {
      std::size_t k = next++;
      if (k >= work.size()) return;
      auto [l, i] = work[k];
      try {
        out[l].sentences[i] = process(tasks[l], i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    int n = std::min<int>(settings_.concurrency, static_cast<int>(std::max<std::size_t>(1, work.size())));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tokequity::judge
