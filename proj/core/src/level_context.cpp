#include "fpsieve/level_context.hpp"

#include <string>

#include "fpsieve/rate.hpp"

namespace fpsieve {

std::vector<TxnId> LevelContext::decode(std::size_t j) const {
  std::vector<TxnId> out;
  out.reserve(freqs.at(j));
  scan(j, [&](TxnId t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<TxnId> LevelContext::stored_words(std::size_t j) const {
  if (encoding == Encoding::kVarint) {
    std::vector<TxnId> out;
    const std::uint8_t* p = bytes.data() + addrs.at(j);
    for (Support i = 0; i < freqs[j]; ++i) out.push_back(varint_read(p));
    return out;
  }
  const auto first = words.begin() + static_cast<std::ptrdiff_t>(addrs.at(j));
  return {first, first + freqs[j]};
}

std::size_t LevelContext::storage_bytes() const noexcept {
  return words.size() * sizeof(TxnId) + bytes.size() + names.size() * sizeof(ItemId) +
         freqs.size() * sizeof(Support) + addrs.size() * sizeof(std::size_t) +
         rate.size() * sizeof(std::uint32_t);
}

void LevelContext::clear() noexcept {
  words.clear();
  bytes.clear();
  names.clear();
  freqs.clear();
  addrs.clear();
  rate.clear();
  txn_count = 0;
  prefix.clear();
  groups.clear();
}

void LevelContext::append_element(ItemId name, std::span<const TxnId> tids) {
  names.push_back(name);
  freqs.push_back(static_cast<Support>(tids.size()));
  TxnId prev = 0;
  switch (encoding) {
    case Encoding::kPlain:
      addrs.push_back(words.size());
      words.insert(words.end(), tids.begin(), tids.end());
      break;
    case Encoding::kDelta:
      addrs.push_back(words.size());
      for (TxnId t : tids) {
        words.push_back(t - prev);
        prev = t;
      }
      break;
    case Encoding::kVarint:
      addrs.push_back(bytes.size());
      for (TxnId t : tids) {
        varint_append(bytes, t - prev);
        prev = t;
      }
      break;
  }
}

void LevelContext::validate(Support min_support) const {
  const std::size_t n = names.size();
  if (freqs.size() != n || addrs.size() != n || rate.size() != n) {
    throw Error("key arrays differ in length");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = rate[i];
    if (j >= n || seen[j]) throw Error("rate is not a permutation");
    seen[j] = true;
    if (i > 0 && freqs[rate[i - 1]] > freqs[j]) throw Error("rate is not frequency ordered");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (freqs[j] < min_support) throw Error("element below threshold stored");
    if (encoding != Encoding::kVarint && j + 1 < n && addrs[j + 1] != addrs[j] + freqs[j]) {
      throw Error("addresses not contiguous at element " + std::to_string(j));
    }
    const auto ids = decode(j);
    TxnId prev = 0;
    for (TxnId t : ids) {
      if (t <= prev || t > txn_count) throw Error("bad tid-list at element " + std::to_string(j));
      prev = t;
    }
  }
}

void recompute_rate(LevelContext& ctx) {
  compute_rate_into(ctx.freqs, TieBreak::kAscendingIndex, ctx.rate);
}

LevelContext build_root_context(const VerticalDatabase& db, const MiningConfig& cfg) {
  LevelContext root;
  root.encoding = cfg.encoding();
  root.txn_count = db.transaction_count;
  for (ItemId i = 0; i < db.item_count(); ++i) {
    if (db.frequency(i) >= cfg.min_support) root.append_element(i, db.tid_lists[i]);
  }
  compute_rate_into(root.freqs, cfg.root_tie_break, root.rate);
  return root;
}

}  // namespace fpsieve
