#include "fpsieve/filters.hpp"

#include <cmath>
#include <stdexcept>

namespace fpsieve {

FilterDecision independence_check(Support f_pattern, Support f_prefix, Support f_last,
                                  std::uint32_t transaction_count, double sigma_multiplier) {
  if (transaction_count == 0) throw std::invalid_argument("transaction count must be >= 1");
  if (f_prefix < 1 || f_prefix > transaction_count || f_last < 1 || f_last > transaction_count) {
    throw std::invalid_argument("marginal frequency outside [1, N]");
  }
  if (f_pattern > f_prefix || f_pattern > f_last) {
    throw std::invalid_argument("pattern frequency exceeds a marginal");
  }
  const double n = transaction_count;
  const double q = (f_prefix / n) * (f_last / n);
  const double expected = n * q;

  FilterDecision d;
  d.ratio_deviation = std::abs(f_pattern / expected - 1.0);
  d.epsilon = sigma_multiplier * std::sqrt(1.0 - q) / std::sqrt(expected);
  d.keep = d.ratio_deviation > d.epsilon;
  return d;
}

std::vector<ItemId> same_frequency_group(LevelContext& child, Support ref_frequency) {
  std::vector<ItemId> group;
  for (std::size_t j = 0; j < child.size(); ++j) {
    if (child.freqs[j] == ref_frequency) group.push_back(child.names[j]);
  }
  if (!group.empty()) {
    retain_elements(child, [&](std::size_t j) { return child.freqs[j] != ref_frequency; });
  }
  return group;
}

}  // namespace fpsieve
