#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <string_view>

namespace tokequity::impact {

// Reporting bands over premiums. Lower-exclusive, upper-inclusive, except the
// first band which is closed so English (exactly 1.0) lands in it.
struct PremiumBand {
  double lower;
  double upper;
  std::string_view label;
};

inline constexpr std::size_t kBandCount = 8;

inline constexpr std::array<PremiumBand, kBandCount> kBands = {{
    {0.0, 1.0, "[0,1]"},
    {1.0, 2.0, "(1,2]"},
    {2.0, 4.0, "(2,4]"},
    {4.0, 6.0, "(4,6]"},
    {6.0, 8.0, "(6,8]"},
    {8.0, 10.0, "(8,10]"},
    {10.0, 16.0, "(10,16]"},
    {16.0, std::numeric_limits<double>::infinity(), "(16,inf)"},
}};

// Index into kBands. Throws a validation error unless premium > 0.
std::size_t band_index(double premium);
const PremiumBand& band_of(double premium);

}  // namespace tokequity::impact
