#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tokequity/error.hpp"

namespace tokequity::tokenizer {

using Rank = std::uint32_t;

class Pretokenizer;

struct LoadOptions {
  // Toy vocabularies used in tests may omit some of the 256 single-byte keys.
  bool require_base_bytes = true;
};

// Raised by vocabulary loading. `lines` holds the 1-based line numbers the
// problem was found on (two entries for a duplicate rank, empty for
// whole-file problems such as an empty vocabulary).
class LoadError : public Error {
 public:
  LoadError(const std::string& message, std::vector<std::size_t> lines = {})
      : Error(ErrorKind::kValidation, message), lines_(std::move(lines)) {}

  const std::vector<std::size_t>& lines() const noexcept { return lines_; }

 private:
  std::vector<std::size_t> lines_;
};

struct TransparentStringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

// Byte-sequence -> rank table plus the pre-tokenization pattern. Immutable
// once constructed; share it by const reference across threads.
class Vocabulary {
 public:
  using MergeMap =
      std::unordered_map<std::string, Rank, TransparentStringHash, std::equal_to<>>;

  // Validates rank uniqueness across merges and special tokens, base-byte
  // completeness (unless relaxed) and that the pattern compiles.
  Vocabulary(std::string name, MergeMap merges,
             std::map<std::string, Rank> special_tokens, std::string pattern,
             LoadOptions options = {});

  const std::string& name() const noexcept { return name_; }
  const std::string& pattern() const noexcept { return pattern_; }
  std::size_t merge_count() const noexcept { return merges_.size(); }
  const std::map<std::string, Rank>& special_tokens() const noexcept {
    return special_tokens_;
  }

  std::optional<Rank> rank_of(std::string_view bytes) const;
  std::optional<Rank> special_rank(std::string_view literal) const;
  // Bytes for a merge rank or a special-token rank.
  std::optional<std::string_view> bytes_of(Rank rank) const;

  const Pretokenizer& pretokenizer() const noexcept { return *pretokenizer_; }

 private:
  std::string name_;
  MergeMap merges_;
  std::map<std::string, Rank> special_tokens_;
  std::unordered_map<Rank, std::string> decoder_;
  std::string pattern_;
  std::shared_ptr<const Pretokenizer> pretokenizer_;
};

// Reads a `<base64(bytes)> <rank>` per-line vocabulary file.
Vocabulary load_vocabulary(const std::filesystem::path& path, std::string_view pattern,
                           LoadOptions options = {},
                           std::map<std::string, Rank> special_tokens = {});

// Same format, from memory; `source` names the input in error messages.
Vocabulary parse_vocabulary(std::string_view content, std::string_view pattern,
                            std::string name, std::string_view source,
                            LoadOptions options = {},
                            std::map<std::string, Rank> special_tokens = {});

}  // namespace tokequity::tokenizer
