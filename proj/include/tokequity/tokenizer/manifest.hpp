#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "tokequity/tokenizer/vocabulary.hpp"

namespace tokequity::tokenizer {

// Per-tokenizer manifest (TOML):
//
//   name = "cl100k_base"
//   vocabulary = "cl100k_base.tiktoken"   # relative to the manifest
//   sha256 = "..."                        # optional integrity pin
//   pattern = '''
//   ...'''
//   [special_tokens]
//   "<|endoftext|>" = 100257
struct TokenizerManifest {
  std::string name;
  std::filesystem::path vocabulary_path;
  std::optional<std::string> sha256;
  std::string pattern;
  std::map<std::string, Rank> special_tokens;
  std::filesystem::path source;
};

TokenizerManifest read_manifest(const std::filesystem::path& path);

// Loads the vocabulary named by the manifest, checking the sha256 pin when set.
Vocabulary load_from_manifest(const TokenizerManifest& manifest);
Vocabulary load_from_manifest(const std::filesystem::path& path);

}  // namespace tokequity::tokenizer
