#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "fpsieve/types.hpp"
#include "fpsieve/vertical_database.hpp"

namespace fpsieve {

struct SweepRow {
  std::uint32_t k = 0;
  double seconds = 0.0;
  std::uint64_t patterns = 0;
  std::size_t peak_bytes = 0;
};

struct SweepOptions {
  /// Passes over the whole K range; the fastest run of each K is reported.
  unsigned repeats = 1;
  /// A K whose fastest run so far took longer than this is not rerun.
  double repeat_below_seconds = 5.0;
};

/// Mines `db` for every maximum length in [k_from, k_to] with a counting sink
/// and records wall time, pattern count and peak conditional storage.
std::vector<SweepRow> run_k_sweep(const VerticalDatabase& db, MiningConfig cfg, std::uint32_t k_from,
                                  std::uint32_t k_to, const SweepOptions& options = {});

/// CSV with header "k,seconds,patterns,peak_bytes".
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace fpsieve
