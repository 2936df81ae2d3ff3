// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero
// if any fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "../fixtures.hpp"
#include "fpsieve/bench.hpp"
#include "fpsieve/filters.hpp"
#include "fpsieve/generator.hpp"
#include "fpsieve/miner.hpp"
#include "fpsieve/oracle.hpp"

namespace {

using namespace fpsieve;
using fpsieve::testing::x;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

constexpr std::size_t kX12Position = 5;

MiningConfig worked_config() {
  MiningConfig cfg;
  cfg.min_support = 5;
  cfg.root_tie_break = TieBreak::kDescendingIndex;
  return cfg;
}

Outcome golden_example() {
  const auto start = Clock::now();
  const VerticalDatabase db = testing::worked_example_db();
  const MiningConfig cfg = worked_config();
  const LevelContext root = build_root_context(db, cfg);
  std::vector<std::uint32_t> rate1;
  for (auto r : root.rate) rate1.push_back(r + 1);
  const bool root_ok = rate1 == std::vector<std::uint32_t>{8, 13, 2, 9, 5, 12, 4, 3, 11, 10, 6, 14, 1, 7};

  ScratchBuffers scratch(root.txn_count);
  const LevelContext child = build_conditional(root, kX12Position, cfg, scratch);
  std::vector<std::uint32_t> child_rate1;
  for (auto r : child.rate) child_rate1.push_back(r + 1);
  const bool child_ok = root.names[root.rate[kX12Position]] == x(12) &&
                        child.names == std::vector<ItemId>{x(3), x(10), x(14), x(1), x(7)} &&
                        child.freqs == std::vector<Support>{5, 7, 7, 6, 5} &&
                        child_rate1 == std::vector<std::uint32_t>{1, 5, 4, 2, 3};

  const auto patterns = testing::mine_all(db, cfg);
  std::vector<std::pair<Support, ItemId>> pairs;
  for (const auto& p : patterns) {
    if (p.items.size() == 2 && p.items[0] == x(12)) pairs.emplace_back(p.support, p.items[1]);
  }
  const bool pairs_ok =
      pairs == std::vector<std::pair<Support, ItemId>>{{5, x(3)}, {5, x(7)}, {6, x(1)}, {7, x(10)}, {7, x(14)}};
  const double took = seconds_since(start);
  return {root_ok && child_ok && pairs_ok && took < 1.0,
          "root rate " + std::string(root_ok ? "ok" : "differs") + ", x12 child " + (child_ok ? "ok" : "differs") +
              ", pairs " + (pairs_ok ? "ok" : "differs") + ", " + fmt(took) + " s"};
}

Outcome scratch_template() {
  const MiningConfig cfg = worked_config();
  const LevelContext root = build_root_context(testing::worked_example_db(), cfg);
  ScratchBuffers scratch(root.txn_count);
  mark_reference(root, kX12Position, scratch);
  const std::vector<std::uint8_t> kod(scratch.kod_tr.begin() + 1, scratch.kod_tr.end());
  std::vector<TxnId> renumbered;
  for (TxnId t = 1; t <= root.txn_count; ++t) {
    if (scratch.kod_tr[t]) renumbered.push_back(scratch.new_tr[t]);
  }
  unmark_reference(root, kX12Position, scratch);
  const bool kod_ok =
      kod == std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1};
  const bool new_ok = renumbered == std::vector<TxnId>{1, 2, 3, 4, 5, 6, 7, 8, 9};
  return {kod_ok && new_ok && scratch.is_clean(),
          std::string("KodTr ") + (kod_ok ? "ok" : "differs") + ", NewTr " + (new_ok ? "ok" : "differs")};
}

Outcome delta_rows() {
  MiningConfig cfg = worked_config();
  cfg.delta_encoding = true;
  const LevelContext root = build_root_context(testing::worked_example_db(), cfg);
  ScratchBuffers scratch(root.txn_count);
  const LevelContext child = build_conditional(root, kX12Position, cfg, scratch);
  const std::vector<std::vector<TxnId>> renumbered = {
      {2, 4, 5, 8, 9}, {1, 3, 4, 5, 6, 8, 9}, {2, 3, 4, 5, 7, 8, 9}, {2, 4, 5, 6, 8, 9}, {2, 3, 5, 8, 9}};
  const std::vector<std::vector<TxnId>> deltas = {
      {2, 2, 1, 3, 1}, {1, 2, 1, 1, 1, 2, 1}, {2, 1, 1, 1, 2, 1, 1}, {2, 2, 1, 1, 2, 1}, {2, 1, 2, 3, 1}};
  if (child.size() != 5) return {false, "child has " + std::to_string(child.size()) + " elements"};
  int matched = 0;
  for (std::size_t j = 0; j < 5; ++j) {
    if (child.decode(j) == renumbered[j] && child.stored_words(j) == deltas[j]) ++matched;
  }
  return {matched == 5, std::to_string(matched) + "/5 rows match"};
}

Outcome oracle_equivalence() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  const double probs[] = {0.3, 0.5, 0.7};
  const Support thresholds[] = {2, 3, 5};
  int matched = 0;
  std::string first_failure;
  for (int instance = 0; instance < 200; ++instance) {
    const auto m = std::uniform_int_distribution<std::uint32_t>(1, 14)(rng);
    const auto n = std::uniform_int_distribution<std::uint32_t>(1, 40)(rng);
    const double p = probs[std::uniform_int_distribution<int>(0, 2)(rng)];
    const Support xi = thresholds[std::uniform_int_distribution<int>(0, 2)(rng)];
    const auto k = std::uniform_int_distribution<std::uint32_t>(1, 5)(rng);
    const VerticalDatabase db = testing::random_db(rng, m, n, p);
    MiningConfig cfg;
    cfg.min_support = xi;
    cfg.max_depth = k;
    if (testing::to_map(testing::mine_all(db, cfg)) == testing::to_map(oracle::enumerate_frequent(db, xi, k))) {
      ++matched;
    } else if (first_failure.empty()) {
      first_failure = ", first mismatch at instance " + std::to_string(instance);
    }
  }
  const double took = seconds_since(start);
  return {matched == 200 && took < 60.0,
          std::to_string(matched) + "/200 instances equal" + first_failure + ", " + fmt(took) + " s"};
}

Outcome grouping_losslessness() {
  std::mt19937_64 rng(77);
  int matched = 0;
  std::uint64_t grouped_total = 0;
  for (int instance = 0; instance < 50; ++instance) {
    const auto m = std::uniform_int_distribution<std::uint32_t>(4, 10)(rng);
    const auto block = std::uniform_int_distribution<std::uint32_t>(2, 4)(rng);
    const auto n = std::uniform_int_distribution<std::uint32_t>(20, 40)(rng);
    std::bernoulli_distribution coin(0.5);
    std::bernoulli_distribution with_block(0.6);
    std::vector<std::vector<ItemId>> txns(n);
    for (auto& t : txns) {
      for (ItemId i = 0; i < m; ++i) {
        if (coin(rng)) t.push_back(i);
      }
      if (with_block(rng)) {
        for (ItemId i = m; i < m + block; ++i) t.push_back(i);
      }
    }
    const VerticalDatabase db = build_vertical(txns, m + block);
    MiningConfig cfg;
    cfg.min_support = 3;
    cfg.max_depth = instance % 2 ? 4 : kUnlimitedDepth;
    const auto plain = testing::to_map(testing::mine_all(db, cfg));
    cfg.grouping_enabled = true;
    CollectingSink sink;
    const MiningStats stats = mine(db, cfg, sink);
    grouped_total += stats.grouped_elements;
    if (testing::expand_groups(sink.patterns, cfg.max_depth) == plain) ++matched;
  }
  return {matched == 50 && grouped_total > 0,
          std::to_string(matched) + "/50 instances equal, " + std::to_string(grouped_total) + " grouped elements"};
}

Outcome filter_behavior() {
  constexpr std::uint32_t kItems = 50;
  constexpr std::uint64_t kPairs = kItems * (kItems - 1) / 2;
  constexpr ItemId kSource = 2, kTarget = 6;
  double worst_drop = 1.0;
  int planted_kept = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MiningConfig cfg;
    cfg.max_depth = 2;
    cfg.filter_enabled = true;
    cfg.sigma_multiplier = 3.0;

    const VerticalDatabase db = generate_bernoulli(kItems, 10000, 0.5, seed);
    CountingSink sink;
    const MiningStats stats = mine(db, cfg, sink);
    worst_drop = std::min(worst_drop, static_cast<double>(stats.total_filtered()) / kPairs);

    const VerticalDatabase planted = plant_dependency(db, kSource, kTarget, 0.9, seed + 1000);
    bool kept = false;
    for (const auto& p : testing::mine_all(planted, cfg)) {
      auto items = p.items;
      std::sort(items.begin(), items.end());
      if (items == std::vector<ItemId>{kSource, kTarget}) kept = true;
    }
    if (kept) ++planted_kept;
  }
  return {worst_drop >= 0.99 && planted_kept == 20,
          "lowest drop fraction " + fmt(worst_drop) + ", planted pair kept in " + std::to_string(planted_kept) +
              "/20 seeds"};
}

std::vector<SweepRow> sweep_rows;
VerticalDatabase sweep_db;

Outcome sweep_shape() {
  sweep_db = generate_bernoulli(50, 10000, 0.5, 1);
  MiningConfig cfg;
  cfg.min_support = 20;
  sweep_rows = run_k_sweep(sweep_db, cfg, 2, 8, SweepOptions{3, std::numeric_limits<double>::infinity()});
  bool monotone = true;
  bool saturating = true;
  std::string times = "times";
  std::string ratios = "ratios K>=5";
  double previous_ratio = 0.0;
  for (std::size_t r = 0; r < sweep_rows.size(); ++r) {
    times += " " + fmt(sweep_rows[r].seconds);
    if (r == 0) continue;
    if (sweep_rows[r].seconds < sweep_rows[r - 1].seconds) monotone = false;
    const double ratio = sweep_rows[r].seconds / sweep_rows[r - 1].seconds;
    if (sweep_rows[r].k >= 5) {
      ratios += " " + fmt(ratio);
      if (sweep_rows[r].k > 5 && ratio > previous_ratio) saturating = false;
      previous_ratio = ratio;
    }
  }
  return {monotone && saturating, times + "; " + ratios};
}

MiningStats scale_stats;

Outcome scale_smoke() {
  const auto start = Clock::now();
  const VerticalDatabase db = generate_bernoulli(50, 100000, 0.5, 1);
  MiningConfig cfg;
  cfg.min_support = 4000;
  CountingSink sink;
  scale_stats = mine(db, cfg, sink);
  const double took = seconds_since(start);
  return {took < 300.0 && sink.count > 0,
          std::to_string(sink.count) + " patterns in " + fmt(took) + " s (bound 300 s)"};
}

Outcome memory_bound() {
  std::string detail;
  bool pass = true;
  if (scale_stats.root_bytes == 0) scale_smoke();
  const double scale_ratio = static_cast<double>(scale_stats.peak_bytes) / scale_stats.root_bytes;
  pass = pass && scale_stats.peak_bytes > 0 && scale_ratio <= 4.0;
  detail = "N=100000: peak/root " + fmt(scale_ratio);
  if (sweep_rows.empty()) {
    sweep_db = generate_bernoulli(50, 10000, 0.5, 1);
    MiningConfig cfg;
    cfg.min_support = 20;
    sweep_rows = run_k_sweep(sweep_db, cfg, 2, 8);
  }
  MiningConfig cfg;
  cfg.min_support = 20;
  const std::size_t root_bytes = build_root_context(sweep_db, cfg).storage_bytes();
  std::size_t peak = 0;
  for (const auto& row : sweep_rows) peak = std::max(peak, row.peak_bytes);
  const double sweep_ratio = static_cast<double>(peak) / root_bytes;
  pass = pass && peak > 0 && sweep_ratio <= 4.0;
  detail += ", N=10000 K<=8: peak/root " + fmt(sweep_ratio);
  return {pass, detail};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "golden worked example", golden_example},
      {2, "scratch template", scratch_template},
      {3, "delta encoding rows", delta_rows},
      {4, "oracle equivalence", oracle_equivalence},
      {5, "grouping losslessness", grouping_losslessness},
      {6, "filter behavior", filter_behavior},
      {7, "K-sweep shape", sweep_shape},
      {8, "scale smoke", scale_smoke},
      {9, "memory bound", memory_bound},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %d (%s): %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
