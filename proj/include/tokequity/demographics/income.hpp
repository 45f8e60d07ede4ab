#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace tokequity::demographics {

// World Bank four-way classification, ordered poorest first.
enum class IncomeClass { kLow = 0, kLowerMiddle = 1, kUpperMiddle = 2, kHigh = 3 };

inline constexpr std::array<IncomeClass, 4> kIncomeClasses = {
    IncomeClass::kLow, IncomeClass::kLowerMiddle, IncomeClass::kUpperMiddle,
    IncomeClass::kHigh};

constexpr std::size_t index_of(IncomeClass c) { return static_cast<std::size_t>(c); }

// "low", "lower_middle", "upper_middle", "high"
std::string_view income_class_name(IncomeClass c);
// "LIC", "LMC", "UMC", "HIC"
std::string_view income_class_code(IncomeClass c);

// Accepts either spelling above, case-insensitively, plus "lower-middle" /
// "upper-middle". Returns nullopt for anything else (including World Bank
// aggregates such as "INX").
std::optional<IncomeClass> parse_income_class(std::string_view text);

// Dollar thresholds for the GDP-based wealth class. The published bands are
// integer ranges (<=1,145 / 1,146-4,515 / 4,516-14,005 / >=14,006); the cut
// points sit on the midpoints of the gaps so every real value classifies.
inline constexpr double kLowUpper = 1145.5;
inline constexpr double kLowerMiddleUpper = 4515.5;
inline constexpr double kUpperMiddleUpper = 14005.5;

// Throws a validation error for negative or non-finite input.
IncomeClass classify_wealth(double w);

}  // namespace tokequity::demographics
