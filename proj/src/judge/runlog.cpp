#include "tokequity/judge/runlog.hpp"

#include <chrono>
#include <ctime>
#include <nlohmann/json.hpp>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::judge {

std::string_view phase_name(Phase p) {
  switch (p) {
    case Phase::kTranslate:
      return "translate";
    case Phase::kBinaryZeroShot:
      return "binary_zero_shot";
    case Phase::kBinaryChainOfThought:
      return "binary_cot";
    case Phase::kScale:
      return "scale";
  }
  return "?";
}

std::string record_to_json(const RunRecord& r) {
  nlohmann::json j = {
      {"phase", r.phase},
      {"language", r.language},
      {"index", r.index},
      {"request_hash", r.request_hash},
      {"raw_response", r.raw_response},
      {"parsed", r.parsed},
      {"status", r.status},
      {"timestamp", r.timestamp},
  };
  if (!r.error.empty()) j["error"] = r.error;
  // Replace rather than throw on invalid UTF-8 from a misbehaving server.
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

namespace {

RunRecord record_from_json(const nlohmann::json& j) {
  RunRecord r;
  r.phase = j.at("phase").get<std::string>();
  r.language = j.at("language").get<std::string>();
  r.index = j.at("index").get<std::size_t>();
  r.request_hash = j.at("request_hash").get<std::string>();
  r.raw_response = j.at("raw_response").get<std::string>();
  r.parsed = j.at("parsed").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.timestamp = j.value("timestamp", "");
  r.error = j.value("error", "");
  return r;
}

}  // namespace

RunLog::RunLog(std::filesystem::path path) : path_(std::move(path)) {
  namespace fs = std::filesystem;
  if (fs::exists(path_)) {
    std::string content = util::read_file(path_);
    std::size_t complete = content.rfind('\n');
    complete = complete == std::string::npos ? 0 : complete + 1;
    if (complete < content.size()) fs::resize_file(path_, complete);

    std::size_t start = 0;
    std::size_t line_no = 0;
    while (start < complete) {
      auto nl = content.find('\n', start);
      std::string_view line(content.data() + start, nl - start);
      start = nl + 1;
      ++line_no;
      if (util::trim(line).empty()) continue;
      try {
        auto r = record_from_json(nlohmann::json::parse(line));
        Key key{r.language, r.index, r.phase};
        records_[key] = std::move(r);
        ++lines_read_;
      } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path_.string() + ":" + std::to_string(line_no) +
                              ": corrupt run log record (" + e.what() + ")");
      }
    }
  } else if (path_.has_parent_path()) {
    fs::create_directories(path_.parent_path());
  }
  out_.open(path_, std::ios::binary | std::ios::app);
  if (!out_) throw IoError("cannot open run log " + path_.string());
}

std::optional<RunRecord> RunLog::find(std::string_view phase, std::string_view language,
                                      std::size_t index) const {
  std::lock_guard lock(mu_);
  auto it = records_.find(Key{std::string(language), index, std::string(phase)});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void RunLog::append(RunRecord record) {
  std::string line = record_to_json(record) + "\n";
  std::lock_guard lock(mu_);
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.flush();
  if (!out_) throw IoError("write to run log " + path_.string() + " failed");
  Key key{record.language, record.index, record.phase};
  records_[key] = std::move(record);
}

std::vector<RunRecord> RunLog::latest() const {
  std::lock_guard lock(mu_);
  std::vector<RunRecord> out;
  out.reserve(records_.size());
  for (const auto& [_, r] : records_) out.push_back(r);
  return out;
}

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace tokequity::judge
