#include "fpsieve/vertical_database.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpsieve {

std::vector<ItemId> Pattern::group_items() const {
  std::vector<ItemId> out;
  for (const auto& g : groups) out.insert(out.end(), g.items.begin(), g.items.end());
  return out;
}

Pattern PatternView::to_pattern() const {
  return Pattern{{items.begin(), items.end()}, support, {groups.begin(), groups.end()}};
}

void MiningConfig::validate() const {
  if (min_support < 1) throw std::invalid_argument("min_support must be >= 1");
  if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
  if (!(sigma_multiplier > 0.0)) throw std::invalid_argument("sigma_multiplier must be > 0");
  if (byte_mode && !delta_encoding) throw std::invalid_argument("byte_mode requires delta_encoding");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

std::string default_item_name(ItemId item) { return "x" + std::to_string(item + 1); }

std::size_t VerticalDatabase::storage_bytes() const noexcept {
  std::size_t n = 0;
  for (const auto& l : tid_lists) n += l.size();
  return n * sizeof(TxnId);
}

std::vector<std::vector<ItemId>> VerticalDatabase::to_horizontal() const {
  std::vector<std::vector<ItemId>> out(transaction_count);
  for (ItemId i = 0; i < tid_lists.size(); ++i) {
    for (TxnId t : tid_lists[i]) out[t - 1].push_back(i);
  }
  return out;
}

void VerticalDatabase::validate() const {
  if (names.size() != tid_lists.size()) throw Error("name table size differs from item count");
  if (!variables.empty() && variables.size() != tid_lists.size()) {
    throw Error("variable table size differs from item count");
  }
  for (std::size_t i = 0; i < tid_lists.size(); ++i) {
    TxnId prev = 0;
    for (TxnId t : tid_lists[i]) {
      if (t <= prev) throw Error("tid-list of " + names[i] + " is not strictly increasing");
      if (t > transaction_count) throw Error("tid-list of " + names[i] + " exceeds transaction count");
      prev = t;
    }
  }
}

VerticalDatabase build_vertical(std::span<const std::vector<ItemId>> transactions,
                                std::size_t item_count, std::vector<std::string> names) {
  VerticalDatabase db;
  db.transaction_count = static_cast<std::uint32_t>(transactions.size());
  db.tid_lists.resize(item_count);
  TxnId t = 0;
  for (const auto& txn : transactions) {
    ++t;
    for (ItemId item : txn) {
      if (item >= item_count) throw Error("item id " + std::to_string(item) + " out of range");
      auto& list = db.tid_lists[item];
      // Duplicates inside one transaction collapse.
      if (list.empty() || list.back() != t) list.push_back(t);
    }
  }
  if (names.empty()) {
    names.reserve(item_count);
    for (ItemId i = 0; i < item_count; ++i) names.push_back(default_item_name(i));
  } else if (names.size() != item_count) {
    throw Error("name table size differs from item count");
  }
  db.names = std::move(names);
  return db;
}

}  // namespace fpsieve
