#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace tokequity::judge {

enum class Phase { kTranslate, kBinaryZeroShot, kBinaryChainOfThought, kScale };

// "translate", "binary_zero_shot", "binary_cot", "scale"
std::string_view phase_name(Phase p);

// One API call. `status` is "ok", "parse_failed" or "api_failed"; `parsed` is
// the translation text or the verdict name ("Correct", "Very Good", ...).
struct RunRecord {
  std::string phase;
  std::string language;
  std::size_t index = 0;
  std::string request_hash;
  std::string raw_response;
  std::string parsed;
  std::string status;
  std::string timestamp;  // UTC, ISO 8601
  std::string error;      // transport error text for api_failed
};

std::string record_to_json(const RunRecord& r);

// Append-only JSON-lines log. Later records for the same (phase, language,
// index) supersede earlier ones. A torn final line from an interrupted write
// is dropped (and truncated away) when the log is opened.
class RunLog {
 public:
  explicit RunLog(std::filesystem::path path);

  const std::filesystem::path& path() const noexcept { return path_; }

  std::optional<RunRecord> find(std::string_view phase, std::string_view language,
                                std::size_t index) const;
  // Thread-safe; the line is flushed before returning.
  void append(RunRecord record);

  // Latest record per key, ordered by (language, index, phase).
  std::vector<RunRecord> latest() const;
  std::size_t lines_read() const noexcept { return lines_read_; }

 private:
  using Key = std::tuple<std::string, std::size_t, std::string>;  // language, index, phase

  std::filesystem::path path_;
  mutable std::mutex mu_;
  std::map<Key, RunRecord> records_;
  std::ofstream out_;
  std::size_t lines_read_ = 0;
};

std::string utc_timestamp();

}  // namespace tokequity::judge
