#include "tokequity/impact/bands.hpp"

#include <cmath>
#include <string>

#include "tokequity/error.hpp"

namespace tokequity::impact {

std::size_t band_index(double premium) {
  if (!(premium > 0) || std::isnan(premium)) {
    throw ValidationError("premium must be positive, got " + std::to_string(premium));
  }
  for (std::size_t i = 0; i < kBandCount; ++i) {
    if (premium <= kBands[i].upper) return i;
  }
  return kBandCount - 1;
}

const PremiumBand& band_of(double premium) { return kBands[band_index(premium)]; }

}  // namespace tokequity::impact
