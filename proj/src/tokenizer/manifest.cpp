#include "tokequity/tokenizer/manifest.hpp"

#include <toml.hpp>

#include "tokequity/util/text.hpp"

namespace tokequity::tokenizer {

TokenizerManifest read_manifest(const std::filesystem::path& path) {
  toml::table doc;
  try {
    doc = toml::parse_file(path.string());
  } catch (const toml::parse_error& e) {
    throw ValidationError(path.string() + ": " + std::string(e.description()));
  }

  TokenizerManifest m;
  m.source = path;
  auto name = doc["name"].value<std::string>();
  auto vocab = doc["vocabulary"].value<std::string>();
  auto pattern = doc["pattern"].value<std::string>();
  if (!name || !vocab || !pattern) {
    throw ValidationError(path.string() +
                          ": tokenizer manifest needs 'name', 'vocabulary' and 'pattern'");
  }
  m.name = *name;
  m.pattern = *pattern;
  m.vocabulary_path = std::filesystem::path(*vocab);
  if (m.vocabulary_path.is_relative()) {
    m.vocabulary_path = path.parent_path() / m.vocabulary_path;
  }
  m.sha256 = doc["sha256"].value<std::string>();

  if (auto* specials = doc["special_tokens"].as_table()) {
    for (const auto& [key, value] : *specials) {
      auto rank = value.value<std::int64_t>();
      if (!rank || *rank < 0) {
        throw ValidationError(path.string() + ": special token '" + std::string(key.str()) +
                              "' needs a non-negative integer rank");
      }
      m.special_tokens.emplace(std::string(key.str()), static_cast<Rank>(*rank));
    }
  }
  return m;
}

Vocabulary load_from_manifest(const TokenizerManifest& manifest) {
  if (manifest.sha256) {
    auto actual = util::sha256_file_hex(manifest.vocabulary_path);
    if (actual != *manifest.sha256) {
      throw ValidationError(manifest.vocabulary_path.string() + ": sha256 " + actual +
                            " does not match manifest pin " + *manifest.sha256);
    }
  }
  std::string content = util::read_file(manifest.vocabulary_path);
  return parse_vocabulary(content, manifest.pattern, manifest.name,
                          manifest.vocabulary_path.string(), {}, manifest.special_tokens);
}

Vocabulary load_from_manifest(const std::filesystem::path& path) {
  return load_from_manifest(read_manifest(path));
}

}  // namespace tokequity::tokenizer
