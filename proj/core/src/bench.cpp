#include "fpsieve/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "fpsieve/miner.hpp"

namespace fpsieve {

std::vector<SweepRow> run_k_sweep(const VerticalDatabase& db, MiningConfig cfg, std::uint32_t k_from,
                                  std::uint32_t k_to, const SweepOptions& options) {
  if (k_from < 1 || k_to < k_from) throw std::invalid_argument("k sweep needs 1 <= from <= to");
  std::vector<SweepRow> rows;
  for (std::uint32_t k = k_from; k <= k_to; ++k) rows.push_back(SweepRow{k, 0.0, 0, 0});
  // Passes run over the whole range so that slow phases of the machine hit
  // different K in different passes instead of one K in all of them.
  for (unsigned pass = 0; pass < std::max(1u, options.repeats); ++pass) {
    for (auto& row : rows) {
      if (pass > 0 && row.seconds > options.repeat_below_seconds) continue;
      cfg.max_depth = row.k;
      CountingSink sink;
      const auto started = std::chrono::steady_clock::now();
      const MiningStats stats = mine(db, cfg, sink);
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - started;
      if (pass == 0 || took.count() < row.seconds) row.seconds = took.count();
      row.patterns = sink.count;
      row.peak_bytes = std::max(row.peak_bytes, stats.peak_bytes);
    }
  }
  return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << "k,seconds,patterns,peak_bytes\n";
  for (const auto& r : rows) {
    out << r.k << ',' << r.seconds << ',' << r.patterns << ',' << r.peak_bytes << '\n';
  }
}

}  // namespace fpsieve
