#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tokequity/error.hpp"
#include "tokequity/tokenizer/vocabulary.hpp"

namespace tokequity::tokenizer {

struct TokenSequence {
  std::vector<Rank> ids;
  std::size_t source_len_bytes = 0;
};

struct EncodeOptions {
  // Off by default: corpus text containing "<|endoftext|>" is encoded as
  // ordinary bytes.
  bool allow_special = false;
};

class DecodeError : public Error {
 public:
  DecodeError(const std::string& message, std::size_t position)
      : Error(ErrorKind::kValidation, message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Pre-tokens of `text` under the table's pattern, as owned byte strings.
std::vector<std::string> pretokenize(std::string_view text, const Vocabulary& table);

// Lowest-rank-first merging of one pre-token.
std::vector<Rank> encode_piece(std::string_view piece, const Vocabulary& table);

TokenSequence encode(std::string_view text, const Vocabulary& table,
                     EncodeOptions options = {});

// Concatenated bytes of each id; may be invalid UTF-8 for partial sequences.
std::string decode(std::span<const Rank> ids, const Vocabulary& table);

struct TokenCounts {
  std::vector<std::size_t> per_sentence;
  std::size_t total = 0;
};

// `threads` == 0 picks the hardware concurrency.
TokenCounts count_tokens(std::span<const std::string> sentences, const Vocabulary& table,
                         unsigned threads = 1);

}  // namespace tokequity::tokenizer
