#include "tokequity/premium/corpus.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::premium {

ParallelCorpus::ParallelCorpus(std::map<std::string, std::vector<std::string>> languages,
                               std::map<std::string, std::string> origin)
    : languages_(std::move(languages)) {
  auto name = [&](const std::string& code) {
    auto it = origin.find(code);
    return it == origin.end() ? code : it->second;
  };
  const std::string* first = nullptr;
  for (const auto& [code, sentences] : languages_) {
    if (!first) {
      first = &code;
      size_ = sentences.size();
    } else if (sentences.size() != size_) {
      throw ValidationError(fmt::format("misaligned corpus: {} has {} sentences but {} has {}",
                                        name(*first), size_, name(code), sentences.size()));
    }
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (util::trim(sentences[i]).empty()) {
        throw ValidationError(fmt::format("{}:{}: empty sentence", name(code), i + 1));
      }
    }
  }

  std::string digest_input;
  for (const auto& [code, sentences] : languages_) {
    digest_input += code;
    digest_input += '\0';
    for (const auto& s : sentences) {
      digest_input += s;
      digest_input += '\n';
    }
    digest_input += '\0';
  }
  fingerprint_ = util::sha256_hex(digest_input);
}

bool ParallelCorpus::contains(std::string_view code) const {
  return languages_.find(std::string(code)) != languages_.end();
}

const std::vector<std::string>& ParallelCorpus::sentences(std::string_view code) const {
  auto it = languages_.find(std::string(code));
  if (it == languages_.end()) {
    throw DataGapError("language '" + std::string(code) + "' is not in the corpus");
  }
  return it->second;
}

std::string ParallelCorpus::resolve(std::string_view code) const {
  if (contains(code)) return std::string(code);
  std::vector<std::string> hits;
  for (const auto& [key, _] : languages_) {
    if (iso_of(key) == code) hits.push_back(key);
  }
  if (hits.size() == 1) return hits.front();
  if (hits.empty()) {
    throw DataGapError("language '" + std::string(code) + "' is not in the corpus");
  }
  std::string list;
  for (const auto& h : hits) list += (list.empty() ? "" : ", ") + h;
  throw ValidationError("language '" + std::string(code) + "' is ambiguous: " + list);
}

std::string iso_of(std::string_view corpus_code) {
  return std::string(corpus_code.substr(0, corpus_code.find('_')));
}

ParallelCorpus load_flores(const std::filesystem::path& dir, std::string_view split,
                           const std::vector<std::string>& only) {
  namespace fs = std::filesystem;
  fs::path root = dir;
  if (fs::is_directory(dir / std::string(split))) root = dir / std::string(split);
  if (!fs::is_directory(root)) {
    throw IoError("corpus directory not found: " + dir.string());
  }

  std::string suffix = "." + std::string(split);
  std::map<std::string, fs::path> files;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_regular_file()) continue;
    auto name = entry.path().filename().string();
    if (name.size() <= suffix.size() || !name.ends_with(suffix)) continue;
    files.emplace(name.substr(0, name.size() - suffix.size()), entry.path());
  }
  if (files.empty()) {
    throw DataGapError(fmt::format("no '*{}' files in {}", suffix, root.string()));
  }

  std::vector<std::string> wanted;
  if (only.empty()) {
    for (const auto& [code, _] : files) wanted.push_back(code);
  } else {
    // Resolve requested codes against the file names without reading them.
    std::map<std::string, std::vector<std::string>> stubs;
    for (const auto& [code, _] : files) stubs[code] = {"x"};
    ParallelCorpus index(std::move(stubs));
    for (const auto& code : only) wanted.push_back(index.resolve(code));
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  }

  std::map<std::string, std::vector<std::string>> languages;
  std::map<std::string, std::string> origin;
  for (const auto& code : wanted) {
    auto lines = util::read_lines(files.at(code));
    // A trailing newline produces no extra sentence.
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    languages.emplace(code, std::move(lines));
    origin.emplace(code, files.at(code).string());
  }
  return ParallelCorpus(std::move(languages), std::move(origin));
}

}  // namespace tokequity::premium
