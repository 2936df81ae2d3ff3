#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fpsieve/types.hpp"

namespace fpsieve {

/// Root database in vertical layout: for every item the ascending list of
/// (1-based) transactions containing it.
struct VerticalDatabase {
  std::uint32_t transaction_count = 0;
  std::vector<std::string> names;
  std::vector<std::vector<TxnId>> tid_lists;
  /// Record variable (1-based) of each item; empty for basket databases.
  std::vector<std::uint32_t> variables;

  std::size_t item_count() const noexcept { return tid_lists.size(); }
  Support frequency(ItemId item) const { return static_cast<Support>(tid_lists.at(item).size()); }

  /// Total bytes of tid-list payload.
  std::size_t storage_bytes() const noexcept;

  /// Transactions as sorted item sets, index t holding transaction t + 1.
  std::vector<std::vector<ItemId>> to_horizontal() const;

  /// Throws Error if any list is unsorted, out of range or names mismatch.
  void validate() const;

  friend bool operator==(const VerticalDatabase&, const VerticalDatabase&) = default;
};

/// Default display name of a dense item: "x1" for item 0.
std::string default_item_name(ItemId item);

/// Transposes transactions (implicitly numbered 1..N in input order) into
/// per-item tid-lists. `item_count` may exceed the largest id used; items
/// beyond it are an error. Names default to default_item_name().
VerticalDatabase build_vertical(std::span<const std::vector<ItemId>> transactions,
                                std::size_t item_count,
                                std::vector<std::string> names = {});

}  // namespace fpsieve
