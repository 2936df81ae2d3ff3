#include <benchmark/benchmark.h>

#include <random>

#include "fpsieve/delta.hpp"
#include "fpsieve/generator.hpp"
#include "fpsieve/miner.hpp"

namespace {

const fpsieve::VerticalDatabase& workload() {
  static const auto db = fpsieve::generate_bernoulli(50, 10000, 0.5, 1);
  return db;
}

// Whole mining run at maximum length state.range(0); arg 1 selects delta
// encoding, arg 2 varint bytes.
void BM_Mine(benchmark::State& state) {
  fpsieve::MiningConfig cfg;
  cfg.min_support = 20;
  cfg.max_depth = static_cast<std::uint32_t>(state.range(0));
  cfg.delta_encoding = state.range(1) > 0;
  cfg.byte_mode = state.range(1) > 1;
  std::uint64_t patterns = 0;
  for (auto _ : state) {
    fpsieve::CountingSink sink;
    fpsieve::mine(workload(), cfg, sink);
    patterns = sink.count;
  }
  state.counters["patterns"] = static_cast<double>(patterns);
  state.counters["patterns/s"] =
      benchmark::Counter(static_cast<double>(patterns), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Mine)
    ->ArgsProduct({{2, 3, 4}, {0, 1, 2}})
    ->ArgNames({"k", "enc"})
    ->Unit(benchmark::kMillisecond);

void BM_BuildConditional(benchmark::State& state) {
  fpsieve::MiningConfig cfg;
  cfg.min_support = 20;
  const fpsieve::LevelContext root = fpsieve::build_root_context(workload(), cfg);
  fpsieve::ScratchBuffers scratch(root.txn_count);
  const auto policy = fpsieve::ChildPolicy::from_config(cfg, workload(), {});
  fpsieve::LevelContext child;
  fpsieve::BuildOutcome outcome;
  for (auto _ : state) {
    fpsieve::build_conditional(root, 0, policy, scratch, child, outcome);
    benchmark::DoNotOptimize(child.words.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(root.words.size()));
}
BENCHMARK(BM_BuildConditional);

void BM_DeltaEncode(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::vector<fpsieve::TxnId> tids(static_cast<std::size_t>(state.range(0)));
  std::uniform_int_distribution<fpsieve::TxnId> gap(1, 4);
  fpsieve::TxnId t = 0;
  for (auto& v : tids) v = t += gap(rng);
  for (auto _ : state) {
    auto bytes = fpsieve::varint_delta_encode(tids);
    benchmark::DoNotOptimize(bytes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DeltaEncode)->Range(1 << 8, 1 << 16);

}  // namespace

BENCHMARK_MAIN();
