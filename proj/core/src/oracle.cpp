#include "fpsieve/oracle.hpp"

#include <algorithm>
#include <string>

namespace fpsieve::oracle {
namespace {

double binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

std::vector<Itemset> enumerate_frequent(const VerticalDatabase& db, Support min_support,
                                        std::uint32_t max_len, std::uint64_t budget) {
  const std::size_t m = db.item_count();
  const std::size_t k_max = std::min<std::size_t>(max_len, m);
  if (binomial(m, k_max) > static_cast<double>(budget) + 0.5) {
    throw BudgetExceeded("oracle refuses: C(" + std::to_string(m) + ", " + std::to_string(k_max) +
                         ") exceeds budget " + std::to_string(budget));
  }

  // Dense membership matrix, transaction-major.
  const std::size_t n = db.transaction_count;
  std::vector<char> member(n * m, 0);
  for (ItemId i = 0; i < m; ++i) {
    for (TxnId t : db.tid_lists[i]) member[(t - 1) * m + i] = 1;
  }

  std::vector<Itemset> out;
  std::vector<ItemId> combo;
  for (std::size_t k = 1; k <= k_max; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = static_cast<ItemId>(i);
    while (true) {
      Support support = 0;
      for (std::size_t t = 0; t < n; ++t) {
        bool all = true;
        for (ItemId i : combo) all = all && member[t * m + i];
        if (all) ++support;
      }
      if (support >= min_support) out.push_back(Itemset{combo, support});

      // Next k-combination in lexicographic order.
      std::size_t pos = k;
      while (pos > 0 && combo[pos - 1] == m - k + pos - 1) --pos;
      if (pos == 0) break;
      ++combo[pos - 1];
      for (std::size_t i = pos; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpsieve::oracle
