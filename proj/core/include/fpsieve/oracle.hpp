#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fpsieve/vertical_database.hpp"

namespace fpsieve::oracle {

struct Itemset {
  std::vector<ItemId> items;  // ascending
  Support support = 0;

  friend auto operator<=>(const Itemset&, const Itemset&) = default;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Every itemset of size 1..max_len with support >= min_support, counted by a
/// full scan of the horizontal transactions per candidate. Sorted.
/// Throws BudgetExceeded when C(M, min(max_len, M)) > budget.
std::vector<Itemset> enumerate_frequent(const VerticalDatabase& db, Support min_support,
                                        std::uint32_t max_len, std::uint64_t budget = 2'000'000);

}  // namespace fpsieve::oracle
