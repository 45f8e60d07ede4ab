#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace tokequity::pipeline {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Everything that determines a run's outputs, flattened to dotted keys
// ("corpus.fingerprint", "judge.model"). The content hash covers `content`
// only; `runtime` holds details that cannot change a report (endpoint port,
// output directory, resume state) and is written but not hashed.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> content;
  std::map<std::string, std::string> runtime;

  void set(const std::string& key, std::string value) { content[key] = std::move(value); }
  void set_runtime(const std::string& key, std::string value) {
    runtime[key] = std::move(value);
  }

  // Records path (relative to `base`) and sha256 of a file under `key`.
  void set_file(const std::string& key, const std::filesystem::path& file,
                const std::filesystem::path& base);
  // For files inside the output directory: the sha256 is content, the path
  // is runtime, so reports do not depend on where --out points.
  void set_output_file(const std::string& key, const std::filesystem::path& file);

  std::string content_hash() const;
  std::string to_json() const;  // pretty-printed, ends with a newline
};

}  // namespace tokequity::pipeline
