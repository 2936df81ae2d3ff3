#include "fpsieve/generator.hpp"

#include <random>
#include <stdexcept>

namespace fpsieve {
namespace {

class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
}

}  // namespace

VerticalDatabase generate_bernoulli(std::uint32_t items, std::uint32_t transactions, double p,
                                    std::uint64_t seed) {
  check_probability(p, "p");
  UniformStream rng(seed);
  VerticalDatabase db;
  db.transaction_count = transactions;
  db.tid_lists.resize(items);
  for (auto& l : db.tid_lists) l.reserve(static_cast<std::size_t>(transactions * p) + 16);
  for (TxnId t = 1; t <= transactions; ++t) {
    for (ItemId i = 0; i < items; ++i) {
      if (rng.next() < p) db.tid_lists[i].push_back(t);
    }
  }
  db.names.reserve(items);
  for (ItemId i = 0; i < items; ++i) db.names.push_back(default_item_name(i));
  return db;
}

VerticalDatabase plant_dependency(const VerticalDatabase& db, ItemId source, ItemId target,
                                  double copy_prob, std::uint64_t seed, std::optional<double> base_rate) {
  if (source == target) throw std::invalid_argument("source and target must differ");
  if (source >= db.item_count() || target >= db.item_count()) {
    throw std::invalid_argument("item id out of range");
  }
  check_probability(copy_prob, "copy_prob");
  const double base = base_rate.value_or(
      db.transaction_count == 0 ? 0.0 : static_cast<double>(db.frequency(target)) / db.transaction_count);
  const double elsewhere = (1.0 - copy_prob) * base;
  check_probability(elsewhere, "(1 - copy_prob) * base_rate");

  VerticalDatabase out = db;
  auto& list = out.tid_lists[target];
  list.clear();
  UniformStream rng(seed);
  const auto& src = db.tid_lists[source];
  std::size_t k = 0;
  for (TxnId t = 1; t <= db.transaction_count; ++t) {
    const bool in_source = k < src.size() && src[k] == t;
    if (in_source) ++k;
    if (rng.next() < (in_source ? copy_prob : elsewhere)) list.push_back(t);
  }
  return out;
}

}  // namespace fpsieve
