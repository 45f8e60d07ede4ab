#include "tokequity/impact/flops.hpp"

#include <fmt/format.h>

#include <cmath>

#include "tokequity/error.hpp"

namespace tokequity::impact {

InferenceCostEstimate inference_flops(double params_p, double tokens_d) {
  if (!(params_p > 0) || !(tokens_d > 0) || !std::isfinite(params_p) ||
      !std::isfinite(tokens_d)) {
    throw ValidationError(
        fmt::format("parameters and tokens must be positive (P={}, D={})", params_p, tokens_d));
  }
  return {params_p, tokens_d, 2.0 * params_p * tokens_d};
}

double fragmentation_multiplier(double premium) {
  if (!(premium > 0) || !std::isfinite(premium)) {
    throw ValidationError(fmt::format("premium must be positive, got {}", premium));
  }
  return premium;
}

}  // namespace tokequity::impact
