#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fpsieve/types.hpp"

namespace fpsieve {

/// Visit order of a level: the 0-based local indices sorted by ascending
/// frequency. Equal frequencies keep ascending index order unless `ties` says
/// otherwise.
std::vector<std::uint32_t> compute_rate(std::span<const Support> freqs,
                                        TieBreak ties = TieBreak::kAscendingIndex);

void compute_rate_into(std::span<const Support> freqs, TieBreak ties,
                       std::vector<std::uint32_t>& rate);

}  // namespace fpsieve
