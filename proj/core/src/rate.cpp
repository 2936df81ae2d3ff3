#include "fpsieve/rate.hpp"

#include <algorithm>
#include <numeric>

namespace fpsieve {

void compute_rate_into(std::span<const Support> freqs, TieBreak ties,
                       std::vector<std::uint32_t>& rate) {
  rate.resize(freqs.size());
  if (ties == TieBreak::kAscendingIndex && rate.size() <= 64) {
    // Insertion sort on (freq, index) keys; distinct keys make it stable.
    std::uint64_t keys[64];
    const std::size_t n = rate.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t key = (std::uint64_t{freqs[i]} << 32) | i;
      std::size_t k = i;
      while (k > 0 && keys[k - 1] > key) {
        keys[k] = keys[k - 1];
        --k;
      }
      keys[k] = key;
    }
    for (std::size_t i = 0; i < n; ++i) rate[i] = static_cast<std::uint32_t>(keys[i]);
    return;
  }
  std::iota(rate.begin(), rate.end(), 0u);
  if (ties == TieBreak::kAscendingIndex) {
    std::stable_sort(rate.begin(), rate.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return freqs[a] < freqs[b]; });
  } else {
    std::sort(rate.begin(), rate.end(), [&](std::uint32_t a, std::uint32_t b) {
      return freqs[a] != freqs[b] ? freqs[a] < freqs[b] : a > b;
    });
  }
}

std::vector<std::uint32_t> compute_rate(std::span<const Support> freqs, TieBreak ties) {
  std::vector<std::uint32_t> rate;
  compute_rate_into(freqs, ties, rate);
  return rate;
}

}  // namespace fpsieve
