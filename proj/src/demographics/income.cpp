#include "tokequity/demographics/income.hpp"

#include <cmath>
#include <string>

#include "tokequity/error.hpp"
#include "tokequity/util/text.hpp"

namespace tokequity::demographics {

std::string_view income_class_name(IncomeClass c) {
  switch (c) {
    case IncomeClass::kLow:
      return "low";
    case IncomeClass::kLowerMiddle:
      return "lower_middle";
    case IncomeClass::kUpperMiddle:
      return "upper_middle";
    case IncomeClass::kHigh:
      return "high";
  }
  return "?";
}

std::string_view income_class_code(IncomeClass c) {
  switch (c) {
    case IncomeClass::kLow:
      return "LIC";
    case IncomeClass::kLowerMiddle:
      return "LMC";
    case IncomeClass::kUpperMiddle:
      return "UMC";
    case IncomeClass::kHigh:
      return "HIC";
  }
  return "?";
}

std::optional<IncomeClass> parse_income_class(std::string_view text) {
  std::string t = util::to_lower_ascii(util::trim(text));
  for (char& c : t) {
    if (c == '-' || c == ' ') c = '_';
  }
  for (auto c : kIncomeClasses) {
    if (t == income_class_name(c) || t == util::to_lower_ascii(income_class_code(c))) {
      return c;
    }
  }
  return std::nullopt;
}

IncomeClass classify_wealth(double w) {
  if (!std::isfinite(w) || w < 0) {
    throw ValidationError("wealth must be a non-negative amount, got " + std::to_string(w));
  }
  if (w < kLowUpper) return IncomeClass::kLow;
  if (w < kLowerMiddleUpper) return IncomeClass::kLowerMiddle;
  if (w < kUpperMiddleUpper) return IncomeClass::kUpperMiddle;
  return IncomeClass::kHigh;
}

}  // namespace tokequity::demographics
