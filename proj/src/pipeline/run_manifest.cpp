#include "tokequity/pipeline/run_manifest.hpp"

#include <nlohmann/json.hpp>

#include "tokequity/util/text.hpp"

namespace tokequity::pipeline {

namespace {

nlohmann::json hashed_part(const RunManifest& m) {
  nlohmann::json doc;
  doc["command"] = m.command;
  doc["tool_version"] = kToolVersion;
  doc["content"] = m.content;
  return doc;
}

}  // namespace

void RunManifest::set_file(const std::string& key, const std::filesystem::path& file,
                           const std::filesystem::path& base) {
  namespace fs = std::filesystem;
  set(key + ".path", fs::absolute(file).lexically_relative(fs::absolute(base)).generic_string());
  set(key + ".sha256", util::sha256_file_hex(file));
}

void RunManifest::set_output_file(const std::string& key, const std::filesystem::path& file) {
  set_runtime(key + ".path", file.generic_string());
  set(key + ".sha256", util::sha256_file_hex(file));
}

std::string RunManifest::content_hash() const {
  return util::sha256_hex(hashed_part(*this).dump());
}

std::string RunManifest::to_json() const {
  auto doc = hashed_part(*this);
  doc["content_sha256"] = content_hash();
  doc["runtime"] = runtime;
  return doc.dump(2) + "\n";
}

}  // namespace tokequity::pipeline
