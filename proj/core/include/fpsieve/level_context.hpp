#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fpsieve/delta.hpp"
#include "fpsieve/types.hpp"
#include "fpsieve/vertical_database.hpp"

namespace fpsieve {

/// One conditional database: every element's tid-list stored back to back in a
/// single flat sequence, indexed by the key arrays names / freqs / addrs, plus
/// the visit order `rate`.
///
/// Local element indices and offsets are 0-based. For kPlain and kDelta the
/// offsets count 32-bit words and addrs[j + 1] == addrs[j] + freqs[j]; for
/// kVarint they count bytes.
class LevelContext {
 public:
  Encoding encoding = Encoding::kPlain;
  std::vector<TxnId> words;
  std::vector<std::uint8_t> bytes;

  std::vector<ItemId> names;
  std::vector<Support> freqs;
  std::vector<std::size_t> addrs;
  std::vector<std::uint32_t> rate;

  /// Transactions represented; ids in this context lie in [1, txn_count].
  std::uint32_t txn_count = 0;
  /// Reference items from level 1 down to the level that produced this context.
  std::vector<ItemId> prefix;
  /// Groups attached along the prefix (same-frequency grouping).
  std::vector<Group> groups;

  std::size_t size() const noexcept { return names.size(); }
  bool empty() const noexcept { return names.empty(); }

  /// Calls visit(id) for each id of element j in ascending order until visit
  /// returns false.
  template <class Visit>
  void scan(std::size_t j, Visit&& visit) const {
    switch (encoding) {
      case Encoding::kPlain:
        return scan_as<Encoding::kPlain>(j, visit);
      case Encoding::kDelta:
        return scan_as<Encoding::kDelta>(j, visit);
      case Encoding::kVarint:
        return scan_as<Encoding::kVarint>(j, visit);
    }
  }

  /// scan() with the encoding fixed at compile time; E must equal `encoding`.
  template <Encoding E, class Visit>
  void scan_as(std::size_t j, Visit&& visit) const {
    const std::size_t n = freqs[j];
    if constexpr (E == Encoding::kPlain) {
      const TxnId* p = words.data() + addrs[j];
      for (std::size_t i = 0; i < n; ++i) {
        if (!visit(p[i])) return;
      }
    } else if constexpr (E == Encoding::kDelta) {
      const TxnId* p = words.data() + addrs[j];
      TxnId acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += p[i];
        if (!visit(acc)) return;
      }
    } else {
      const std::uint8_t* p = bytes.data() + addrs[j];
      TxnId acc = 0;
      for (std::size_t i = 0; i < n; ++i) {
        acc += varint_read(p);
        if (!visit(acc)) return;
      }
    }
  }

  /// Absolute ids of element j.
  std::vector<TxnId> decode(std::size_t j) const;

  /// Raw stored form of element j (deltas when delta-encoded).
  std::vector<TxnId> stored_words(std::size_t j) const;

  /// Payload plus key arrays.
  std::size_t storage_bytes() const noexcept;

  /// Empties the context but keeps allocated capacity.
  void clear() noexcept;

  /// Appends element `name` with the given ascending ids in this context's
  /// encoding. Does not touch `rate`.
  void append_element(ItemId name, std::span<const TxnId> tids);

  /// Throws Error on any broken invariant (ordering, ranges, rate validity).
  void validate(Support min_support) const;
};

/// Level-1 context: every item of `db` with frequency >= min_support, in item
/// order, encoded per `cfg`, with rate ordered by cfg.root_tie_break.
LevelContext build_root_context(const VerticalDatabase& db, const MiningConfig& cfg);

/// Recomputes ctx.rate from ctx.freqs with ascending-index ties.
void recompute_rate(LevelContext& ctx);

/// Removes the elements for which keep(j) is false, compacting storage and
/// recomputing rate with ascending-index ties.
template <class Keep>
void retain_elements(LevelContext& ctx, Keep&& keep) {
  LevelContext out;
  out.encoding = ctx.encoding;
  out.txn_count = ctx.txn_count;
  out.prefix = std::move(ctx.prefix);
  out.groups = std::move(ctx.groups);
  for (std::size_t j = 0; j < ctx.size(); ++j) {
    if (keep(j)) out.append_element(ctx.names[j], ctx.decode(j));
  }
  recompute_rate(out);
  ctx = std::move(out);
}

}  // namespace fpsieve
