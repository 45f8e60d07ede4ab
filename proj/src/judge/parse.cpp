#include "tokequity/judge/parse.hpp"

#include <array>

#include "tokequity/util/text.hpp"

namespace tokequity::judge {

namespace {

constexpr std::array<std::pair<Scale, std::string_view>, 5> kScaleNames = {{
    {Scale::kPoor, "Poor"},
    {Scale::kFair, "Fair"},
    {Scale::kGood, "Good"},
    {Scale::kVeryGood, "Very Good"},
    {Scale::kExcellent, "Excellent"},
}};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

bool is_markup(char c) {
  static constexpr std::string_view kMarkup = "*`\"'.!<>[]():";
  return is_space(c) || kMarkup.find(c) != std::string_view::npos;
}

std::string_view strip_markup(std::string_view s) {
  while (!s.empty() && is_markup(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_markup(s.back())) s.remove_suffix(1);
  return s;
}

std::string collapse_lower(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
  }
  return out;
}

}  // namespace

std::string_view binary_name(Binary v) {
  switch (v) {
    case Binary::kCorrect:
      return "Correct";
    case Binary::kIncorrect:
      return "Incorrect";
    case Binary::kUnparsed:
      return "Unparsed";
  }
  return "Unparsed";
}

std::string_view scale_name(Scale v) {
  for (const auto& [s, name] : kScaleNames) {
    if (s == v) return name;
  }
  return "Unparsed";
}

std::optional<Binary> binary_from_name(std::string_view name) {
  for (auto v : {Binary::kCorrect, Binary::kIncorrect, Binary::kUnparsed}) {
    if (binary_name(v) == name) return v;
  }
  return std::nullopt;
}

std::optional<Scale> scale_from_name(std::string_view name) {
  if (name == "Unparsed") return Scale::kUnparsed;
  for (const auto& [s, n] : kScaleNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

std::optional<std::string> parse_translation(std::string_view response) {
  static constexpr std::string_view kPrefix = "english:";
  std::size_t start = 0;
  while (start <= response.size()) {
    auto nl = response.find('\n', start);
    auto line = response.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                                    : nl - start);
    std::size_t i = 0;
    bool backticked = false;
    while (i < line.size() && (is_space(line[i]) || line[i] == '`' || line[i] == '*')) {
      backticked = backticked || line[i] == '`';
      ++i;
    }
    if (line.size() - i >= kPrefix.size() &&
        util::to_lower_ascii(line.substr(i, kPrefix.size())) == kPrefix) {
      auto rest = util::trim(line.substr(i + kPrefix.size()));
      if (backticked) {
        while (!rest.empty() && rest.back() == '`') rest.remove_suffix(1);
        rest = util::trim(rest);
      }
      if (rest.empty()) return std::nullopt;
      return std::string(rest);
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return std::nullopt;
}

std::optional<std::string> rating_value(std::string_view response) {
  static constexpr std::string_view kMarker = "rating:";
  std::string lower = util::to_lower_ascii(response);
  auto at = lower.rfind(kMarker);
  if (at == std::string::npos) return std::nullopt;
  auto rest = response.substr(at + kMarker.size());
  // The value may start on the next line ("Rating:\nCORRECT").
  rest = util::trim(rest);
  auto nl = rest.find('\n');
  if (nl != std::string_view::npos) rest = rest.substr(0, nl);
  return collapse_lower(strip_markup(rest));
}

Binary parse_binary(std::string_view response) {
  auto v = rating_value(response);
  if (!v) return Binary::kUnparsed;
  if (*v == "correct") return Binary::kCorrect;
  if (*v == "incorrect") return Binary::kIncorrect;
  return Binary::kUnparsed;
}

Scale parse_scale(std::string_view response) {
  auto v = rating_value(response);
  if (!v) return Scale::kUnparsed;
  for (const auto& [s, name] : kScaleNames) {
    if (*v == util::to_lower_ascii(name)) return s;
  }
  return Scale::kUnparsed;
}

}  // namespace tokequity::judge
