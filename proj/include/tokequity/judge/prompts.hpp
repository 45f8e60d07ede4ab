#pragma once

#include <string>
#include <string_view>

namespace tokequity::judge {

// System prompts, verbatim. The translation prompt carries a
// "{source_language}" slot.
extern const std::string_view kTranslatePrompt;
extern const std::string_view kBinaryZeroShotPrompt;
extern const std::string_view kBinaryChainOfThoughtPrompt;
extern const std::string_view kScalePrompt;

inline constexpr std::string_view kSourceLanguageSlot = "{source_language}";

// kTranslatePrompt with the slot filled by a human-readable language name.
std::string translation_prompt(std::string_view source_language);

// User message for the judge calls:
//   Original: <original>
//   Translation: <translation>
std::string judge_user_content(std::string_view original, std::string_view translation);

}  // namespace tokequity::judge
