#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace tokequity::judge {

enum class Binary { kIncorrect, kCorrect, kUnparsed };
enum class Scale { kPoor, kFair, kGood, kVeryGood, kExcellent, kUnparsed };

std::string_view binary_name(Binary v);  // "Correct", "Incorrect", "Unparsed"
std::string_view scale_name(Scale v);    // "Poor" ... "Excellent", "Unparsed"
std::optional<Binary> binary_from_name(std::string_view name);
std::optional<Scale> scale_from_name(std::string_view name);

// Text after "English:" on the first line that starts with it (leading
// whitespace, backticks and asterisks ignored; prefix matched
// case-insensitively), trimmed. nullopt when no such line exists or the
// translation is empty.
std::optional<std::string> parse_translation(std::string_view response);

// Value after the LAST "Rating:" (case-insensitive), up to the end of that
// line, with surrounding whitespace and markup (* ` " ' . ! < > [ ] ( ) :)
// stripped and inner whitespace collapsed. nullopt when there is no marker.
std::optional<std::string> rating_value(std::string_view response);

// CORRECT / INCORRECT, case-insensitive.
Binary parse_binary(std::string_view response);
// poor / fair / good / very good / excellent, case- and space-insensitive.
Scale parse_scale(std::string_view response);

}  // namespace tokequity::judge
