#include "fpsieve/miner.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <thread>

#include "fpsieve/filters.hpp"
#include "fpsieve/rate.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#endif

namespace fpsieve {
namespace {

using Clock = std::chrono::steady_clock;

/// Cheap monotonic tick count; converted to seconds against Clock at the end
/// of a run.
inline std::uint64_t ticks() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __rdtsc();
#else
  return static_cast<std::uint64_t>(Clock::now().time_since_epoch().count());
#endif
}

template <Encoding E>
class ChildWriter {
 public:
  explicit ChildWriter(LevelContext& child) : child_(child) {}

  std::size_t begin() {
    prev_ = 0;
    start_ = E == Encoding::kVarint ? child_.bytes.size() : child_.words.size();
    return start_;
  }

  void push(TxnId t) {
    if constexpr (E == Encoding::kPlain) {
      child_.words.push_back(t);
    } else if constexpr (E == Encoding::kDelta) {
      child_.words.push_back(t - prev_);
    } else {
      varint_append(child_.bytes, t - prev_);
    }
    prev_ = t;
  }

  /// Appends new_tr[t] for every t in [first, last) with kod_tr[t] set;
  /// returns how many. Plain encoding only.
  Support append_marked(const TxnId* first, const TxnId* last, const std::uint8_t* kod_tr,
                        const TxnId* new_tr) {
    static_assert(E == Encoding::kPlain);
    auto& words = child_.words;
    words.resize(start_ + static_cast<std::size_t>(last - first));
    TxnId* out = words.data() + start_;
    Support n = 0;
    for (const TxnId* p = first; p != last; ++p) {
      out[n] = new_tr[*p];
      n += kod_tr[*p];
    }
    words.resize(start_ + n);
    return n;
  }

  void rollback() {
    if constexpr (E == Encoding::kVarint) {
      child_.bytes.resize(start_);
    } else {
      child_.words.resize(start_);
    }
  }

 private:
  LevelContext& child_;
  std::size_t start_ = 0;
  TxnId prev_ = 0;
};

// Template of the reference list: marker plus new transaction number.
template <Encoding E>
MarkedRange mark_impl(const LevelContext& parent, std::uint32_t ref, ScratchBuffers& scratch) {
  std::uint8_t* const kod_tr = scratch.kod_tr.data();
  TxnId* const new_tr = scratch.new_tr.data();
  MarkedRange r;
  parent.scan_as<E>(ref, [&](TxnId t) {
    kod_tr[t] = 1;
    new_tr[t] = ++r.count;
    if (r.min == 0) r.min = t;
    r.max = t;
    return true;
  });
  return r;
}

template <Encoding E>
void unmark_impl(const LevelContext& parent, std::uint32_t ref, ScratchBuffers& scratch) {
  std::uint8_t* const kod_tr = scratch.kod_tr.data();
  parent.scan_as<E>(ref, [&](TxnId t) {
    kod_tr[t] = 0;
    return true;
  });
}

template <Encoding E>
void build_impl(const LevelContext& parent, std::size_t ref_rate_pos, const ChildPolicy& policy,
                ScratchBuffers& scratch, LevelContext& child, BuildOutcome& outcome) {
  const std::uint32_t ref = parent.rate[ref_rate_pos];
  const ItemId ref_name = parent.names[ref];
  const Support ref_freq = parent.freqs[ref];

  child.clear();
  child.encoding = parent.encoding;
  child.txn_count = ref_freq;
  child.prefix = parent.prefix;
  child.prefix.push_back(ref_name);
  child.groups = parent.groups;
  outcome.group.clear();
  outcome.filtered = 0;
  outcome.exclusive_skips = 0;

  const MarkedRange marked = mark_impl<E>(parent, ref, scratch);
  const TxnId ref_min = marked.min;
  const TxnId ref_max = marked.max;
  const std::uint8_t* const kod_tr = scratch.kod_tr.data();
  const TxnId* const new_tr = scratch.new_tr.data();

  const bool exclusive = !policy.variables.empty();
  const bool filtering = !policy.root_freqs.empty();
  const Support min_support = policy.min_support;
  ChildWriter<E> writer(child);

  for (std::size_t pos = ref_rate_pos + 1; pos < parent.size(); ++pos) {
    const std::uint32_t j = parent.rate[pos];
    const ItemId name = parent.names[j];
    if (exclusive && policy.variables[name] == policy.variables[ref_name]) {
      ++outcome.exclusive_skips;
      continue;
    }

    const std::size_t start = writer.begin();
    Support count = 0;
    if constexpr (E == Encoding::kPlain) {
      // Only ids inside [ref_min, ref_max] can match.
      const TxnId* first = parent.words.data() + parent.addrs[j];
      const TxnId* last = first + parent.freqs[j];
      while (first != last && *first < ref_min) ++first;
      while (last != first && last[-1] > ref_max) --last;
      if (policy.counts_only) {
        for (const TxnId* p = first; p != last; ++p) count += kod_tr[*p];
      } else {
        count = writer.append_marked(first, last, kod_tr, new_tr);
      }
    } else {
      const Support length = parent.freqs[j];
      Support seen = 0;
      parent.scan_as<E>(j, [&](TxnId t) {
        ++seen;
        if (t > ref_max) return false;
        if (t >= ref_min && kod_tr[t]) {
          ++count;
          if (!policy.counts_only) writer.push(new_tr[t]);
        }
        // Stop once the threshold is out of reach.
        return count + (length - seen) >= min_support;
      });
    }

    if (count < min_support) {
      writer.rollback();
      continue;
    }
    if (policy.grouping && count == ref_freq) {
      outcome.group.push_back(name);
      writer.rollback();
      continue;
    }
    if (filtering) {
      const auto decision = independence_check(count, ref_freq, policy.root_freqs[name],
                                               policy.root_transactions, policy.sigma_multiplier);
      if (!decision.keep) {
        ++outcome.filtered;
        writer.rollback();
        continue;
      }
    }
    child.names.push_back(name);
    child.freqs.push_back(count);
    child.addrs.push_back(start);
  }

  unmark_impl<E>(parent, ref, scratch);

  compute_rate_into(child.freqs, TieBreak::kAscendingIndex, child.rate);
  if (!outcome.group.empty()) {
    child.groups.push_back(Group{static_cast<std::uint32_t>(parent.prefix.size()), outcome.group});
  }
}

struct Cursor {
  std::uint32_t depth;  // 0 = level-1 context
  std::size_t position;
};

}  // namespace

MarkedRange mark_reference(const LevelContext& parent, std::size_t ref_rate_pos, ScratchBuffers& scratch) {
  const std::uint32_t ref = parent.rate.at(ref_rate_pos);
  switch (parent.encoding) {
    case Encoding::kPlain:
      return mark_impl<Encoding::kPlain>(parent, ref, scratch);
    case Encoding::kDelta:
      return mark_impl<Encoding::kDelta>(parent, ref, scratch);
    case Encoding::kVarint:
      return mark_impl<Encoding::kVarint>(parent, ref, scratch);
  }
  return {};
}

void unmark_reference(const LevelContext& parent, std::size_t ref_rate_pos, ScratchBuffers& scratch) {
  const std::uint32_t ref = parent.rate.at(ref_rate_pos);
  switch (parent.encoding) {
    case Encoding::kPlain:
      return unmark_impl<Encoding::kPlain>(parent, ref, scratch);
    case Encoding::kDelta:
      return unmark_impl<Encoding::kDelta>(parent, ref, scratch);
    case Encoding::kVarint:
      return unmark_impl<Encoding::kVarint>(parent, ref, scratch);
  }
}

bool ScratchBuffers::is_clean() const noexcept {
  return std::all_of(kod_tr.begin(), kod_tr.end(), [](std::uint8_t v) { return v == 0; });
}

ChildPolicy ChildPolicy::from_config(const MiningConfig& cfg, const VerticalDatabase& db,
                                     std::span<const Support> root_freqs) {
  ChildPolicy p;
  p.min_support = cfg.min_support;
  p.grouping = cfg.grouping_enabled;
  p.sigma_multiplier = cfg.sigma_multiplier;
  p.root_transactions = db.transaction_count;
  if (cfg.filter_enabled) p.root_freqs = root_freqs;
  if (cfg.skip_exclusive) p.variables = db.variables;
  return p;
}

void build_conditional(const LevelContext& parent, std::size_t ref_rate_pos, const ChildPolicy& policy,
                       ScratchBuffers& scratch, LevelContext& child, BuildOutcome& outcome) {
  switch (parent.encoding) {
    case Encoding::kPlain:
      return build_impl<Encoding::kPlain>(parent, ref_rate_pos, policy, scratch, child, outcome);
    case Encoding::kDelta:
      return build_impl<Encoding::kDelta>(parent, ref_rate_pos, policy, scratch, child, outcome);
    case Encoding::kVarint:
      return build_impl<Encoding::kVarint>(parent, ref_rate_pos, policy, scratch, child, outcome);
  }
}

LevelContext build_conditional(const LevelContext& parent, std::size_t ref_rate_pos,
                               const MiningConfig& cfg, ScratchBuffers& scratch) {
  ChildPolicy policy;
  policy.min_support = cfg.min_support;
  LevelContext child;
  BuildOutcome outcome;
  build_conditional(parent, ref_rate_pos, policy, scratch, child, outcome);
  return child;
}

void emit_pattern(const LevelContext& ctx, std::size_t rate_pos, const std::vector<Group>* groups,
                  PatternSink& sink, std::vector<ItemId>& items_buffer) {
  const std::uint32_t j = ctx.rate[rate_pos];
  items_buffer.assign(ctx.prefix.begin(), ctx.prefix.end());
  items_buffer.push_back(ctx.names[j]);
  const auto& g = groups != nullptr ? *groups : ctx.groups;
  sink.consume(PatternView{items_buffer, ctx.freqs[j], g});
}

std::uint64_t MiningStats::total_patterns() const noexcept {
  std::uint64_t n = 0;
  for (auto c : patterns_per_length) n += c;
  return n;
}

std::uint64_t MiningStats::total_filtered() const noexcept {
  std::uint64_t n = 0;
  for (auto c : filtered_per_length) n += c;
  return n;
}

void MiningStats::merge(const MiningStats& other) {
  auto add = [](auto& into, const auto& from) {
    if (into.size() < from.size()) into.resize(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
  };
  add(patterns_per_length, other.patterns_per_length);
  add(filtered_per_length, other.filtered_per_length);
  add(level_seconds, other.level_seconds);
  contexts_built += other.contexts_built;
  grouped_elements += other.grouped_elements;
  exclusive_skips += other.exclusive_skips;
  root_bytes = std::max(root_bytes, other.root_bytes);
  // Workers hold their contexts simultaneously.
  peak_bytes += other.peak_bytes;
}

MiningStats mine_context(const VerticalDatabase& db, const LevelContext& root, const MiningConfig& cfg,
                         PatternSink& sink, std::span<const std::size_t> level1_positions) {
  cfg.validate();
  const auto started = Clock::now();
  const std::uint64_t started_ticks = ticks();

  MiningStats stats;
  stats.root_bytes = root.storage_bytes();

  std::vector<Support> root_freqs(db.item_count());
  for (ItemId i = 0; i < db.item_count(); ++i) root_freqs[i] = db.frequency(i);
  const ChildPolicy base = ChildPolicy::from_config(cfg, db, root_freqs);

  std::vector<std::size_t> all_positions;
  if (level1_positions.empty()) {
    all_positions.resize(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) all_positions[i] = i;
    level1_positions = all_positions;
  }

  ScratchBuffers scratch(std::max(db.transaction_count, root.txn_count));
  // arenas[d] holds the context at depth d (d >= 1); reused across siblings.
  // Every level consumes a distinct item, so depth never exceeds root.size().
  std::vector<LevelContext> arenas(std::min<std::size_t>(cfg.max_depth, root.size()) + 1);
  std::vector<Cursor> stack;
  std::vector<ItemId> items_buffer;
  BuildOutcome outcome;
  std::size_t stack_bytes = 0;
  std::vector<std::uint64_t> level_ticks;

  auto count = [](std::vector<std::uint64_t>& v, std::size_t i, std::uint64_t n) {
    if (v.size() <= i) v.resize(i + 1, 0);
    v[i] += n;
  };

  if (!level1_positions.empty()) stack.push_back(Cursor{0, 0});
  while (!stack.empty()) {
    Cursor& cur = stack.back();
    const std::uint32_t depth = cur.depth;
    const LevelContext& ctx = depth == 0 ? root : arenas[depth];
    const std::size_t limit = depth == 0 ? level1_positions.size() : ctx.size();
    if (cur.position >= limit) {
      if (depth > 0) stack_bytes -= ctx.storage_bytes();
      stack.pop_back();
      continue;
    }
    const std::size_t pos = depth == 0 ? level1_positions[cur.position] : cur.position;
    ++cur.position;

    const std::uint32_t level = depth + 1;  // length of the pattern emitted here
    const bool descend = level < cfg.max_depth && pos + 1 < ctx.size();
    if (!descend) {
      emit_pattern(ctx, pos, nullptr, sink, items_buffer);
      count(stats.patterns_per_length, level, 1);
      continue;
    }

    LevelContext& child = arenas[level];
    ChildPolicy policy = base;
    policy.counts_only = level + 1 >= cfg.max_depth;

    const std::uint64_t build_started = ticks();
    build_conditional(ctx, pos, policy, scratch, child, outcome);
    count(level_ticks, level + 1, ticks() - build_started);
    ++stats.contexts_built;
    stats.grouped_elements += outcome.group.size();
    stats.exclusive_skips += outcome.exclusive_skips;
    if (outcome.filtered > 0) count(stats.filtered_per_length, level + 1, outcome.filtered);

    const std::size_t child_bytes = child.storage_bytes();
    stats.peak_bytes = std::max(stats.peak_bytes, stack_bytes + child_bytes);

    emit_pattern(ctx, pos, &child.groups, sink, items_buffer);
    count(stats.patterns_per_length, level, 1);

    if (!child.empty()) {
      stack_bytes += child_bytes;
      stack.push_back(Cursor{level, 0});
    }
  }

  const std::chrono::duration<double> total = Clock::now() - started;
  stats.total_seconds = total.count();
  const std::uint64_t elapsed_ticks = ticks() - started_ticks;
  const double seconds_per_tick = elapsed_ticks == 0 ? 0.0 : stats.total_seconds / elapsed_ticks;
  stats.level_seconds.resize(level_ticks.size());
  for (std::size_t i = 0; i < level_ticks.size(); ++i) stats.level_seconds[i] = level_ticks[i] * seconds_per_tick;
  return stats;
}

namespace {

/// Per-worker buffer forwarding to a shared sink in batches.
class BatchingSink final : public PatternSink {
 public:
  BatchingSink(PatternSink& target, std::mutex& mutex) : target_(target), mutex_(mutex) {}
  ~BatchingSink() override { flush(); }

  void consume(const PatternView& pattern) override {
    batch_.push_back(pattern.to_pattern());
    if (batch_.size() >= 4096) flush();
  }

  void flush() {
    if (batch_.empty()) return;
    std::lock_guard lock(mutex_);
    for (const auto& p : batch_) target_.consume(PatternView{p.items, p.support, p.groups});
    batch_.clear();
  }

 private:
  PatternSink& target_;
  std::mutex& mutex_;
  std::vector<Pattern> batch_;
};

}  // namespace

MiningStats mine(const VerticalDatabase& db, const MiningConfig& cfg, PatternSink& sink) {
  cfg.validate();
  const auto started = Clock::now();
  const LevelContext root = build_root_context(db, cfg);

  if (cfg.threads <= 1 || root.size() < 2) {
    MiningStats stats = mine_context(db, root, cfg, sink);
    const std::chrono::duration<double> total = Clock::now() - started;
    stats.total_seconds = total.count();
    return stats;
  }

  const unsigned workers = std::min<std::size_t>(cfg.threads, root.size());
  std::vector<std::vector<std::size_t>> shares(workers);
  for (std::size_t i = 0; i < root.size(); ++i) shares[i % workers].push_back(i);

  std::vector<MiningStats> partial(workers);
  std::mutex sink_mutex;
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        BatchingSink local(sink, sink_mutex);
        partial[w] = mine_context(db, root, cfg, local, shares[w]);
      });
    }
  }

  MiningStats stats;
  for (const auto& p : partial) stats.merge(p);
  const std::chrono::duration<double> total = Clock::now() - started;
  stats.total_seconds = total.count();
  return stats;
}

}  // namespace fpsieve
