#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tokequity/judge/chat.hpp"
#include "tokequity/judge/parse.hpp"
#include "tokequity/judge/runlog.hpp"

namespace tokequity::judge {

enum class TranslationStatus { kOk, kParseFailed, kApiFailed };
std::string_view status_name(TranslationStatus s);  // "ok", "parse_failed", "api_failed"

struct TranslationResult {
  std::string language;
  std::size_t index = 0;
  std::string raw_response;
  std::string translation;
  TranslationStatus status = TranslationStatus::kApiFailed;
};

struct JudgeVerdict {
  std::size_t index = 0;
  Binary binary_zero_shot = Binary::kUnparsed;
  Binary binary_cot = Binary::kUnparsed;
  Scale scale = Scale::kUnparsed;
  std::string zero_shot_raw;
  std::string cot_raw;
  std::string scale_raw;
};

struct SentenceOutcome {
  TranslationResult translation;
  // Only sentences with a usable translation are judged.
  std::optional<JudgeVerdict> verdict;
};

struct LanguageTask {
  std::string code;  // corpus code, e.g. "hin_Deva"
  std::string name;  // fills the prompt's {source_language} slot
  std::vector<std::string> sentences;
  std::vector<std::string> references;  // aligned English originals
};

struct LanguageOutcome {
  std::string code;
  std::string name;
  std::vector<SentenceOutcome> sentences;
};

struct JudgeSettings {
  std::string translation_model;
  std::string judge_model;
  int concurrency = 4;
};

// Runs translate -> (zero-shot, chain-of-thought, 5-point) per sentence with at
// most `concurrency` sentences in flight. Every call is logged before its
// result is used; a logged record with the same request hash is reused
// instead of calling again, so an interrupted run resumes where it stopped.
class JudgeRunner {
 public:
  // `client` may be null: nothing is called and missing records count as
  // api_failed (offline report regeneration).
  JudgeRunner(ChatClient* client, RunLog& log, JudgeSettings settings);

  // Invoked after each appended log record, from worker threads.
  std::function<void(const RunRecord&)> on_logged;

  std::vector<LanguageOutcome> run(const std::vector<LanguageTask>& tasks);

  int calls_made() const noexcept { return calls_made_.load(); }

 private:
  struct CallResult {
    std::string raw;
    bool api_failed = false;
  };
  CallResult call(Phase phase, const std::string& language, std::size_t index,
                  const ChatRequest& request,
                  const std::function<std::pair<std::string, std::string>(const std::string&)>&
                      parse);
  SentenceOutcome process(const LanguageTask& task, std::size_t index);

  ChatClient* client_;
  RunLog& log_;
  JudgeSettings settings_;
  std::atomic<int> calls_made_{0};
};

}  // namespace tokequity::judge
