#include "tokequity/tokenizer/vocabulary.hpp"

#include <fmt/format.h>

#include <array>

#include "tokequity/tokenizer/pretokenizer.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::tokenizer {

Vocabulary::Vocabulary(std::string name, MergeMap merges,
                       std::map<std::string, Rank> special_tokens, std::string pattern,
                       LoadOptions options)
    : name_(std::move(name)),
      merges_(std::move(merges)),
      special_tokens_(std::move(special_tokens)),
      pattern_(std::move(pattern)) {
  if (merges_.empty()) throw LoadError(name_ + ": empty vocabulary");

  decoder_.reserve(merges_.size() + special_tokens_.size());
  for (const auto& [bytes, rank] : merges_) {
    auto [it, inserted] = decoder_.emplace(rank, bytes);
    if (!inserted) {
      throw LoadError(fmt::format("{}: rank {} assigned to two byte sequences", name_, rank));
    }
  }
  for (const auto& [literal, rank] : special_tokens_) {
    auto [it, inserted] = decoder_.emplace(rank, literal);
    if (!inserted) {
      throw LoadError(fmt::format("{}: special token '{}' reuses rank {}", name_,
                                  literal, rank));
    }
  }

  if (options.require_base_bytes) {
    for (int b = 0; b < 256; ++b) {
      char c = static_cast<char>(b);
      if (!merges_.contains(std::string_view(&c, 1))) {
        throw LoadError(fmt::format("{}: missing base byte 0x{:02x}", name_, b));
      }
    }
  }

  try {
    pretokenizer_ = std::make_shared<const Pretokenizer>(pattern_);
  } catch (const Error& e) {
    throw LoadError(name_ + ": " + e.what());
  }
}

std::optional<Rank> Vocabulary::rank_of(std::string_view bytes) const {
  auto it = merges_.find(bytes);
  if (it == merges_.end()) return std::nullopt;
  return it->second;
}

std::optional<Rank> Vocabulary::special_rank(std::string_view literal) const {
  auto it = special_tokens_.find(std::string(literal));
  if (it == special_tokens_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string_view> Vocabulary::bytes_of(Rank rank) const {
  auto it = decoder_.find(rank);
  if (it == decoder_.end()) return std::nullopt;
  return std::string_view(it->second);
}

Vocabulary parse_vocabulary(std::string_view content, std::string_view pattern,
                            std::string name, std::string_view source,
                            LoadOptions options,
                            std::map<std::string, Rank> special_tokens) {
  Vocabulary::MergeMap merges;
  std::unordered_map<Rank, std::size_t> rank_line;
  std::unordered_map<std::string, std::size_t> key_line;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < content.size()) {
    auto nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto where = [&](std::string_view what) {
      return fmt::format("{}:{}: {}", source, line_no, what);
    };
    auto sp = line.find(' ');
    if (sp == std::string_view::npos || line.find(' ', sp + 1) != std::string_view::npos) {
      throw LoadError(where("expected '<base64> <rank>'"), {line_no});
    }
    auto bytes = util::base64_decode(line.substr(0, sp));
    if (!bytes) throw LoadError(where("malformed base64"), {line_no});
    auto rank = util::parse_int(line.substr(sp + 1));
    if (!rank || *rank < 0 || *rank > std::int64_t{UINT32_MAX} ||
        line.substr(sp + 1).find_first_not_of("0123456789") != std::string_view::npos) {
      throw LoadError(where("rank is not a non-negative integer"), {line_no});
    }
    auto r = static_cast<Rank>(*rank);
    if (auto it = rank_line.find(r); it != rank_line.end()) {
      throw LoadError(fmt::format("{}: duplicate rank {} on lines {} and {}", source, r,
                                  it->second, line_no),
                      {it->second, line_no});
    }
    if (auto it = key_line.find(*bytes); it != key_line.end()) {
      throw LoadError(fmt::format("{}: duplicate byte sequence on lines {} and {}", source,
                                  it->second, line_no),
                      {it->second, line_no});
    }
    rank_line.emplace(r, line_no);
    key_line.emplace(*bytes, line_no);
    merges.emplace(std::move(*bytes), r);
  }
  if (merges.empty()) throw LoadError(std::string(source) + ": empty vocabulary");
  return Vocabulary(std::move(name), std::move(merges), std::move(special_tokens),
                    std::string(pattern), options);
}

Vocabulary load_vocabulary(const std::filesystem::path& path, std::string_view pattern,
                           LoadOptions options,
                           std::map<std::string, Rank> special_tokens) {
  std::string content = util::read_file(path);
  return parse_vocabulary(content, pattern, path.stem().string(), path.string(), options,
                          std::move(special_tokens));
}

}  // namespace tokequity::tokenizer
