#pragma once

// Shared test data and test-only helpers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "fpsieve/miner.hpp"
#include "fpsieve/oracle.hpp"
#include "fpsieve/vertical_database.hpp"

namespace fpsieve::testing {

/// Per-item transaction lists of the 14-item, 20-transaction worked example
/// (x1..x14 are items 0..13).
inline const std::vector<std::vector<TxnId>>& worked_example_lists() {
  static const std::vector<std::vector<TxnId>> lists = {
      {3, 4, 5, 7, 9, 10, 12, 13, 14, 15, 18, 19, 20},     // x1
      {1, 2, 6, 8, 11, 16, 17},                            // x2
      {3, 5, 9, 10, 12, 13, 14, 18, 19, 20},               // x3
      {1, 2, 4, 6, 7, 8, 11, 15, 16, 17},                  // x4
      {2, 6, 8, 10, 12, 13, 16, 20},                       // x5
      {1, 3, 4, 5, 7, 9, 11, 14, 15, 17, 18, 19},          // x6
      {3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 19, 20},  // x7
      {1, 2, 10, 15, 16},                                  // x8
      {3, 4, 5, 8, 11, 12, 16, 17},                        // x9
      {1, 2, 6, 7, 9, 10, 13, 14, 15, 18, 19, 20},         // x10
      {2, 4, 5, 7, 8, 9, 11, 12, 14, 17, 18},              // x11
      {1, 3, 6, 10, 13, 15, 16, 19, 20},                   // x12
      {1, 2, 4, 5, 11, 12, 15},                            // x13
      {3, 6, 7, 8, 9, 10, 13, 14, 16, 17, 18, 19, 20},     // x14
  };
  return lists;
}

inline VerticalDatabase worked_example_db() {
  VerticalDatabase db;
  db.transaction_count = 20;
  db.tid_lists = worked_example_lists();
  for (ItemId i = 0; i < 14; ++i) db.names.push_back(default_item_name(i));
  return db;
}

/// Item id of "x<n>".
constexpr ItemId x(unsigned n) { return n - 1; }

/// Random database where each item appears with probability p.
inline VerticalDatabase random_db(std::mt19937_64& rng, std::uint32_t m, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<ItemId>> txns(n);
  for (auto& t : txns) {
    for (ItemId i = 0; i < m; ++i) {
      if (coin(rng)) t.push_back(i);
    }
  }
  return build_vertical(txns, m);
}

using ItemsetMap = std::map<std::vector<ItemId>, Support>;

inline ItemsetMap to_map(const std::vector<oracle::Itemset>& sets) {
  ItemsetMap out;
  for (const auto& s : sets) out.emplace(s.items, s.support);
  return out;
}

/// Patterns as sorted itemsets (groups must be empty). Fails on duplicates by
/// returning an entry with support 0.
inline ItemsetMap to_map(const std::vector<Pattern>& patterns) {
  ItemsetMap out;
  for (const auto& p : patterns) {
    auto items = p.items;
    std::sort(items.begin(), items.end());
    auto [it, inserted] = out.emplace(items, p.support);
    if (!inserted) it->second = 0;
  }
  return out;
}

/// Expands grouped patterns into every itemset made of the pattern items plus
/// any subset of the grouped items, all with the pattern's support, keeping
/// those of length <= max_len.
inline ItemsetMap expand_groups(const std::vector<Pattern>& patterns, std::uint32_t max_len) {
  ItemsetMap out;
  for (const auto& p : patterns) {
    const auto group = p.group_items();
    const std::size_t subsets = std::size_t{1} << group.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      auto items = p.items;
      for (std::size_t b = 0; b < group.size(); ++b) {
        if (mask >> b & 1) items.push_back(group[b]);
      }
      if (items.size() > max_len) continue;
      std::sort(items.begin(), items.end());
      out.emplace(items, p.support);
    }
  }
  return out;
}

/// Support by direct scan of the vertical lists (set intersection).
inline Support recount(const VerticalDatabase& db, std::vector<ItemId> items) {
  std::vector<TxnId> acc(db.tid_lists[items[0]]);
  for (std::size_t k = 1; k < items.size(); ++k) {
    std::vector<TxnId> next;
    const auto& l = db.tid_lists[items[k]];
    std::set_intersection(acc.begin(), acc.end(), l.begin(), l.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return static_cast<Support>(acc.size());
}

inline std::vector<Pattern> mine_all(const VerticalDatabase& db, const MiningConfig& cfg) {
  CollectingSink sink;
  mine(db, cfg, sink);
  return std::move(sink.patterns);
}

}  // namespace fpsieve::testing
