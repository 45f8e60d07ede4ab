#include "tokequity/judge/prompts.hpp"

#include "tokequity/error.hpp"

namespace tokequity::judge {

const std::string_view kTranslatePrompt =
    "You are a highly advanced machine translation system specializing in translations "
    "from {source_language} to English. Please translate the given text by the user, and "
    "format your response as follows: `English: <translation>`.\n"
    "\n"
    "Provide a high-quality translation that accurately conveys the meaning of the original "
    "text.";

const std::string_view kBinaryZeroShotPrompt =
    "You are an expert machine translation evaluation system, capable of accurately "
    "assessing precise matches between original and translated texts. Given an original "
    "English sentence and its back-translation into English from another language, assess "
    "whether the retranslated sentence accurately conveys the same meaning as the original, "
    "ensuring that all facts and details are preserved.\n"
    "\n"
    "Rate the translation quality as either `CORRECT` if the translated sentence is "
    "semantically identical to the original, preserving all factual information and "
    "details, or `INCORRECT` if it differs in meaning, omits or distorts any facts or "
    "details.\n"
    "\n"
    "Respond with: `Rating: <rating>`. Provide no further explanation.";

const std::string_view kBinaryChainOfThoughtPrompt =
    "You are an expert machine translation evaluation system, capable of accurately "
    "assessing precise matches between original and translated texts. Given an original "
    "English sentence and its back-translation into English from another language, assess "
    "whether the retranslated sentence accurately conveys the same meaning as the original, "
    "ensuring that all facts and details are preserved.\n"
    "\n"
    "Rate the translation quality as either `CORRECT` if the translated sentence is "
    "semantically identical to the original, preserving all factual information and "
    "details, or `INCORRECT` if it differs in meaning, omits or distorts any facts or "
    "details.\n"
    "\n"
    "First, explain to yourself in one sentence the reason for your rating. Then, end your "
    "response with `Rating: <rating>`.";

const std::string_view kScalePrompt =
    "You are an expert machine translation evaluation system, capable of accurately "
    "assessing translation quality. Given a source text and its translated counterpart, "
    "rate the translation quality using a 5-point scale: Poor, Fair, Good, Very Good, "
    "Excellent. The scale is defined as follows:\n"
    "\n"
    "**Poor**: The translation is barely comprehensible, contains significant errors, and "
    "may not convey the original message. It may require extensive editing or "
    "retranslation.\n"
    "\n"
    "**Fair**: The translation is understandable but contains noticeable errors, "
    "inaccuracies, or awkward phrasing. It may require some editing to improve clarity and "
    "accuracy.\n"
    "\n"
    "**Good**: The translation is generally accurate and clear, but may contain minor "
    "errors or slight inaccuracies. It is suitable for general use but may not be perfect "
    "for critical or high-stakes applications.\n"
    "\n"
    "**Very Good**: The translation is highly accurate, clear, and nuanced, with only minor "
    "imperfections. It is suitable for most professional purposes and demonstrates a strong "
    "understanding of the source text.\n"
    "\n"
    "**Excellent**: The translation is virtually flawless, conveying the exact meaning, "
    "tone, and nuance of the original text. It is suitable for high-stakes applications, "
    "such as official publications or critical communications.\n"
    "\n"
    "First, explain to yourself in one sentence the reason for your rating. Then, end your "
    "response with `Rating: <rating>`.";

std::string translation_prompt(std::string_view source_language) {
  if (source_language.empty()) throw ValidationError("source language name is empty");
  std::string out(kTranslatePrompt);
  auto at = out.find(kSourceLanguageSlot);
  out.replace(at, kSourceLanguageSlot.size(), source_language);
  return out;
}

std::string judge_user_content(std::string_view original, std::string_view translation) {
  std::string out = "Original: ";
  out += original;
  out += "\nTranslation: ";
  out += translation;
  return out;
}

}  // namespace tokequity::judge
