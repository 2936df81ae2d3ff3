#pragma once

#include <cstdint>
#include <vector>

#include "fpsieve/level_context.hpp"
#include "fpsieve/types.hpp"

namespace fpsieve {

struct FilterDecision {
  bool keep = true;
  double epsilon = 0.0;
  /// |f_pattern / (N q) - 1|
  double ratio_deviation = 0.0;
};

/// Statistical-independence test of a pattern against the split
/// (prefix, last element). Under independence the pattern count is binomial
/// with mean N q, q = (f_prefix / N) (f_last / N), and standard deviation
/// sqrt(N q (1 - q)); the pattern is kept only when its relative deviation from
/// N q exceeds sigma_multiplier standard deviations:
///
///   epsilon = sigma_multiplier * sqrt(1 - q) / sqrt(N q)
///   keep   <=> |f_pattern / (N q) - 1| > epsilon
///
/// Throws std::invalid_argument when the counts are inconsistent
/// (f_prefix or f_last outside [1, N], f_pattern above either).
FilterDecision independence_check(Support f_pattern, Support f_prefix, Support f_last,
                                   std::uint32_t transaction_count, double sigma_multiplier);

/// Removes from `child` every element whose frequency equals `ref_frequency`
/// (present in every conditional transaction) and returns their item ids in
/// local index order.
std::vector<ItemId> same_frequency_group(LevelContext& child, Support ref_frequency);

}  // namespace fpsieve
