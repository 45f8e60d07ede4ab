#include "tokequity/tokenizer/pretokenizer.hpp"

#include <unicode/regex.h>
#include <unicode/unistr.h>

#include <cstdint>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::tokenizer {

struct Pretokenizer::Impl {
  // Immutable after compile; matchers are created per call so one pattern
  // can serve concurrent callers.
  std::unique_ptr<icu::RegexPattern> regex;
};

Pretokenizer::Pretokenizer(std::string_view pattern) : impl_(std::make_unique<Impl>()) {
  UErrorCode status = U_ZERO_ERROR;
  UParseError parse_error{};
  auto upattern = icu::UnicodeString::fromUTF8(
      icu::StringPiece(pattern.data(), static_cast<int32_t>(pattern.size())));
  impl_->regex.reset(icu::RegexPattern::compile(upattern, 0, parse_error, status));
  if (U_FAILURE(status)) {
    throw ValidationError("pre-tokenization pattern does not compile (" +
                          std::string(u_errorName(status)) + " at offset " +
                          std::to_string(parse_error.offset) + ")");
  }
}

Pretokenizer::~Pretokenizer() = default;

std::vector<std::string_view> Pretokenizer::split(std::string_view text) const {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  std::size_t run_start = 0;
  while (i < text.size()) {
    if (util::utf8_sequence_length(text, i) != 0) {
      i += util::utf8_sequence_length(text, i);
      continue;
    }
    if (i > run_start) split_valid(text.substr(run_start, i - run_start), out);
    std::size_t bad_start = i;
    while (i < text.size() && util::utf8_sequence_length(text, i) == 0) ++i;
    out.push_back(text.substr(bad_start, i - bad_start));
    run_start = i;
  }
  if (text.size() > run_start) split_valid(text.substr(run_start), out);
  return out;
}

void Pretokenizer::split_valid(std::string_view run,
                               std::vector<std::string_view>& out) const {
  // UTF-16 code unit index -> byte offset in `run`.
  std::vector<std::size_t> offsets;
  offsets.reserve(run.size() + 1);
  for (std::size_t i = 0; i < run.size();) {
    std::size_t len = util::utf8_sequence_length(run, i);
    offsets.push_back(i);
    if (len == 4) offsets.push_back(i);
    i += len;
  }
  offsets.push_back(run.size());

  auto utext = icu::UnicodeString::fromUTF8(
      icu::StringPiece(run.data(), static_cast<int32_t>(run.size())));
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::RegexMatcher> matcher(impl_->regex->matcher(utext, status));
  if (U_FAILURE(status)) {
    throw ValidationError(std::string("regex matcher failed: ") + u_errorName(status));
  }

  auto emit = [&](int32_t from, int32_t to) {
    std::size_t b = offsets[static_cast<std::size_t>(from)];
    std::size_t e = offsets[static_cast<std::size_t>(to)];
    out.push_back(run.substr(b, e - b));
  };

  int32_t last = 0;
  while (matcher->find(status) && U_SUCCESS(status)) {
    int32_t start = matcher->start(status);
    int32_t end = matcher->end(status);
    if (start > last) emit(last, start);
    if (end > start) emit(start, end);
    if (end > last) last = end;
  }
  if (U_FAILURE(status)) {
    throw ValidationError(std::string("regex matching failed: ") + u_errorName(status));
  }
  if (last < utext.length()) emit(last, utext.length());
}

}  // namespace tokequity::tokenizer
