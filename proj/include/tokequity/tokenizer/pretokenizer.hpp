#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace tokequity::tokenizer {

// Splits text into pre-tokens with a regular expression (ICU dialect, which
// accepts the published GPT-family patterns verbatim).
//
// Every byte of the input lands in exactly one chunk: text the pattern does
// not match is emitted as its own chunk, and maximal runs of bytes that are
// not well-formed UTF-8 become standalone chunks.
class Pretokenizer {
 public:
  explicit Pretokenizer(std::string_view pattern);
  ~Pretokenizer();

  Pretokenizer(const Pretokenizer&) = delete;
  Pretokenizer& operator=(const Pretokenizer&) = delete;

  // Views into `text`, in order; their concatenation equals `text`.
  std::vector<std::string_view> split(std::string_view text) const;

 private:
  struct Impl;

  void split_valid(std::string_view run, std::vector<std::string_view>& out) const;

  std::unique_ptr<Impl> impl_;
};

}  // namespace tokequity::tokenizer
