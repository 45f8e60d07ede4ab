#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tokequity::premium {

// Sentences aligned by index across languages. Keys are corpus codes such as
// "eng_Latn"; every language has the same number of non-empty sentences.
class ParallelCorpus {
 public:
  ParallelCorpus() = default;
  // Validates alignment and non-emptiness; `origin` names each language's
  // source in error messages (defaults to the language code).
  explicit ParallelCorpus(std::map<std::string, std::vector<std::string>> languages,
                          std::map<std::string, std::string> origin = {});

  std::size_t size() const noexcept { return size_; }
  const std::map<std::string, std::vector<std::string>>& languages() const noexcept {
    return languages_;
  }
  bool contains(std::string_view code) const;
  const std::vector<std::string>& sentences(std::string_view code) const;

  // Exact key, or the single key whose ISO part matches ("eng" -> "eng_Latn").
  // Throws when absent or ambiguous.
  std::string resolve(std::string_view code) const;

  // sha256 over the sorted (code, sentences) content; pins the corpus version.
  const std::string& fingerprint() const noexcept { return fingerprint_; }

 private:
  std::map<std::string, std::vector<std::string>> languages_;
  std::size_t size_ = 0;
  std::string fingerprint_;
};

// ISO 639-3 part of a corpus code: "zho_Hans" -> "zho".
std::string iso_of(std::string_view corpus_code);

// Loads `<code>.<split>` files from `dir` or `dir/<split>/`. A non-empty
// `only` restricts loading to those codes (resolved like ParallelCorpus::resolve).
ParallelCorpus load_flores(const std::filesystem::path& dir, std::string_view split = "dev",
                           const std::vector<std::string>& only = {});

}  // namespace tokequity::premium
