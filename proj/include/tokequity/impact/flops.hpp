#pragma once

namespace tokequity::impact {

struct InferenceCostEstimate {
  double params_p = 0.0;  // non-embedding parameters
  double tokens_d = 0.0;  // tokens processed
  double flops = 0.0;     // 2 * P * D
};

// Forward-pass FLOPs, approximately 2PD. Throws unless both are finite and > 0.
InferenceCostEstimate inference_flops(double params_p, double tokens_d);

// FLOP (and so emission) multiplier for content that costs `premium` times the
// English token count. This is the premium itself.
double fragmentation_multiplier(double premium);

}  // namespace tokequity::impact
