#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "fpsieve/vertical_database.hpp"

namespace fpsieve {

/// Pseudo-random stream behind every generator: std::mt19937_64 seeded with
/// the given seed, each draw mapped to a uniform double as (x >> 11) * 2^-53.
/// Both pieces are fully specified by the standard, so databases are
/// reproducible across platforms.
inline constexpr std::string_view kGeneratorAlgorithm = "mt19937_64, 53-bit uniform";

/// Each of `items` items present in each of `transactions` transactions
/// independently with probability p. Draws run transaction-major, item-minor.
/// Items are named x1..xM.
VerticalDatabase generate_bernoulli(std::uint32_t items, std::uint32_t transactions, double p,
                                    std::uint64_t seed);

/// Redraws `target`'s membership: present with probability copy_prob in the
/// transactions containing `source`, with probability (1 - copy_prob) *
/// base_rate elsewhere. base_rate defaults to target's current marginal rate.
/// Throws std::invalid_argument if source == target or an id is out of range.
VerticalDatabase plant_dependency(const VerticalDatabase& db, ItemId source, ItemId target,
                                  double copy_prob, std::uint64_t seed,
                                  std::optional<double> base_rate = std::nullopt);

}  // namespace fpsieve
