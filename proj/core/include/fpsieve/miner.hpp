#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpsieve/level_context.hpp"
#include "fpsieve/types.hpp"
#include "fpsieve/vertical_database.hpp"

namespace fpsieve {

/// Marker and renumbering templates shared by every conditional-database
/// construction of one mining task. Indexed by transaction id, so both hold
/// transaction_count + 1 entries; entry 0 is unused.
struct ScratchBuffers {
  std::vector<std::uint8_t> kod_tr;
  std::vector<TxnId> new_tr;

  explicit ScratchBuffers(std::uint32_t transaction_count)
      : kod_tr(std::size_t{transaction_count} + 1, 0), new_tr(std::size_t{transaction_count} + 1, 0) {}

  /// True when no marker is set.
  bool is_clean() const noexcept;
};

/// Range of the reference list marked in the scratch template.
struct MarkedRange {
  TxnId min = 0;
  TxnId max = 0;
  TxnId count = 0;
};

/// Sets kod_tr to 1 at every transaction of the element at rate position
/// `ref_rate_pos` and assigns new_tr = 1, 2, ... to them in ascending order.
MarkedRange mark_reference(const LevelContext& parent, std::size_t ref_rate_pos, ScratchBuffers& scratch);

/// Resets the kod_tr entries set by mark_reference.
void unmark_reference(const LevelContext& parent, std::size_t ref_rate_pos, ScratchBuffers& scratch);

/// What happens to candidate elements while a child is built, beyond the
/// support threshold.
struct ChildPolicy {
  Support min_support = 1;
  /// Only frequencies are needed (deepest level): skip writing tid-lists.
  bool counts_only = false;
  /// Move elements present in every conditional transaction into a group.
  bool grouping = false;
  /// Independence filter; active when root_freqs is non-empty.
  double sigma_multiplier = 3.0;
  std::uint32_t root_transactions = 0;
  std::span<const Support> root_freqs;
  /// Record variable per item; items of the reference's own variable are
  /// skipped without intersecting. Inactive when empty.
  std::span<const std::uint32_t> variables;

  /// Policy derived from a mining configuration for database `db`.
  static ChildPolicy from_config(const MiningConfig& cfg, const VerticalDatabase& db,
                                 std::span<const Support> root_freqs);
};

struct BuildOutcome {
  std::vector<ItemId> group;
  std::uint32_t filtered = 0;
  std::uint32_t exclusive_skips = 0;
};

/// Builds into `child` the conditional database of the element at rate
/// position `ref_rate_pos` of `parent`. Candidates are the elements at later
/// rate positions, visited in rate order; each is intersected against the
/// reference through scratch.kod_tr, renumbered through scratch.new_tr and
/// kept when its count reaches policy.min_support (and it passes grouping and
/// filtering). child.txn_count is the reference's frequency, child.prefix the
/// parent prefix plus the reference, and child.groups the parent groups plus
/// the new group, if any. scratch is left all-zero.
void build_conditional(const LevelContext& parent, std::size_t ref_rate_pos, const ChildPolicy& policy,
                       ScratchBuffers& scratch, LevelContext& child, BuildOutcome& outcome);

/// Threshold-only construction.
LevelContext build_conditional(const LevelContext& parent, std::size_t ref_rate_pos,
                               const MiningConfig& cfg, ScratchBuffers& scratch);

class PatternSink {
 public:
  virtual ~PatternSink() = default;
  virtual void consume(const PatternView& pattern) = 0;
};

class CollectingSink final : public PatternSink {
 public:
  void consume(const PatternView& pattern) override { patterns.push_back(pattern.to_pattern()); }

  std::vector<Pattern> patterns;
};

class CountingSink final : public PatternSink {
 public:
  void consume(const PatternView& pattern) override {
    ++count;
    if (by_length.size() <= pattern.items.size()) by_length.resize(pattern.items.size() + 1, 0);
    ++by_length[pattern.items.size()];
  }

  std::uint64_t count = 0;
  std::vector<std::uint64_t> by_length;
};

/// Emits the pattern formed by ctx.prefix and the element at rate position
/// `rate_pos`, with the element's frequency in ctx as support. `groups`
/// replaces ctx.groups when non-null. `items_buffer` is reused storage.
void emit_pattern(const LevelContext& ctx, std::size_t rate_pos, const std::vector<Group>* groups,
                  PatternSink& sink, std::vector<ItemId>& items_buffer);

struct MiningStats {
  /// Index = pattern length (items only, groups excluded).
  std::vector<std::uint64_t> patterns_per_length;
  /// Candidates dropped by the independence filter, by pattern length.
  std::vector<std::uint64_t> filtered_per_length;
  /// Seconds spent building conditional databases, by level of the built context.
  std::vector<double> level_seconds;
  std::uint64_t contexts_built = 0;
  std::uint64_t grouped_elements = 0;
  std::uint64_t exclusive_skips = 0;
  /// Bytes of the level-1 context.
  std::size_t root_bytes = 0;
  /// Peak bytes of live conditional contexts (level 2 and deeper).
  std::size_t peak_bytes = 0;
  double total_seconds = 0.0;

  std::uint64_t total_patterns() const noexcept;
  std::uint64_t total_filtered() const noexcept;
  void merge(const MiningStats& other);
};

/// Mines every pattern of length 1..cfg.max_depth with support >=
/// cfg.min_support, depth first and rate ascending at every level. The level
/// loop runs on an explicit stack of cursors with one reusable context arena
/// per depth. With cfg.threads > 1 the level-1 references are dealt out to
/// worker threads and the order of patterns reaching `sink` is unspecified.
MiningStats mine(const VerticalDatabase& db, const MiningConfig& cfg, PatternSink& sink);

/// Mines starting from a prepared level-1 context. `level1_positions` limits
/// the level-1 references (rate positions); empty means all.
MiningStats mine_context(const VerticalDatabase& db, const LevelContext& root, const MiningConfig& cfg,
                         PatternSink& sink, std::span<const std::size_t> level1_positions = {});

}  // namespace fpsieve
