// fpsieve: frequent-pattern mining from the command line.
//
//   fpsieve mine     --input PATH [--format basket|record --schema PATH] --min-support N ...
//   fpsieve generate --items M --transactions N --prob P [--seed S] [--plant s,t,c] --output PATH
//   fpsieve bench    --k-sweep A..B (--input PATH | --items M --transactions N --prob P) ...
//
// Exit codes: 0 success, 1 usage error, 2 input parse error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fpsieve/bench.hpp"
#include "fpsieve/generator.hpp"
#include "fpsieve/io.hpp"
#include "fpsieve/miner.hpp"
#include "fpsieve/oracle.hpp"

namespace {

using namespace fpsieve;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kOnOff = {"on", "off"};

struct MineFlags {
  std::string input;
  std::string format = "basket";
  std::string schema;
  std::int64_t min_support = 1;
  std::uint32_t max_len = kUnlimitedDepth;
  std::string filter = "off";
  double sigma = 3.0;
  std::string grouping = "off";
  std::string delta = "off";
  std::string byte_mode = "off";
  std::string exclusive = "off";
  std::string root_ties = "asc";
  unsigned threads = 1;
};

void add_mine_flags(CLI::App& cmd, MineFlags& f, bool with_max_len) {
  cmd.add_option("--format", f.format, "Input format")->check(CLI::IsMember({"basket", "record"}));
  cmd.add_option("--schema", f.schema, "Record schema file (record format only)");
  cmd.add_option("--min-support", f.min_support, "Occurrence threshold, >= 1");
  if (with_max_len) cmd.add_option("--max-len", f.max_len, "Maximum pattern length (default: unlimited)");
  cmd.add_option("--filter", f.filter, "Statistical-independence filter")->check(CLI::IsMember(kOnOff));
  cmd.add_option("--sigma", f.sigma, "Filter width in standard deviations");
  cmd.add_option("--grouping", f.grouping, "Same-frequency grouping")->check(CLI::IsMember(kOnOff));
  cmd.add_option("--delta", f.delta, "Delta-encode conditional tid-lists")->check(CLI::IsMember(kOnOff));
  cmd.add_option("--byte-mode", f.byte_mode, "Store deltas as variable-width bytes (needs --delta on)")
      ->check(CLI::IsMember(kOnOff));
  cmd.add_option("--exclusive", f.exclusive, "Skip same-variable intersections (record format)")
      ->check(CLI::IsMember(kOnOff));
  cmd.add_option("--root-ties", f.root_ties, "Tie order of equal frequencies at level 1")
      ->check(CLI::IsMember({"asc", "desc"}));
  cmd.add_option("--threads", f.threads, "Worker threads; >1 leaves output order unspecified");
}

MiningConfig to_config(const MineFlags& f) {
  if (f.min_support < 1) throw UsageError("--min-support must be >= 1");
  if (f.max_len < 1) throw UsageError("--max-len must be >= 1");
  MiningConfig cfg;
  cfg.min_support = static_cast<Support>(f.min_support);
  cfg.max_depth = f.max_len;
  cfg.filter_enabled = f.filter == "on";
  cfg.sigma_multiplier = f.sigma;
  cfg.grouping_enabled = f.grouping == "on";
  cfg.delta_encoding = f.delta == "on";
  cfg.byte_mode = f.byte_mode == "on";
  cfg.skip_exclusive = f.exclusive == "on";
  cfg.root_tie_break = f.root_ties == "desc" ? TieBreak::kDescendingIndex : TieBreak::kAscendingIndex;
  cfg.threads = f.threads;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

VerticalDatabase load_database(const MineFlags& f) {
  auto in = open_in(f.input);
  if (f.format == "record") {
    if (f.schema.empty()) throw UsageError("--format record requires --schema");
    auto schema_in = open_in(f.schema);
    const RecordSchema schema = parse_schema(schema_in);
    return parse_record(in, schema);
  }
  if (!f.schema.empty()) throw UsageError("--schema applies to --format record only");
  return parse_basket(in);
}

/// Output target: a file, or stdout for "" / "stdout" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "stdout" || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::runtime_error("write failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int cmd_mine(const MineFlags& f, const std::string& output, const std::string& stats_path, bool sort) {
  const MiningConfig cfg = to_config(f);
  const VerticalDatabase db = load_database(f);
  Output out(output);

  MiningStats stats;
  if (sort) {
    CollectingSink sink;
    stats = mine(db, cfg, sink);
    sort_by_support(sink.patterns);
    write_patterns(sink.patterns, db.names, out.stream());
  } else {
    PatternWriter writer(out.stream(), db.names);
    stats = mine(db, cfg, writer);
  }
  out.finish();

  if (!stats_path.empty()) {
    std::ofstream s(stats_path);
    if (!s) throw UsageError("cannot write " + stats_path);
    s << "items=" << db.item_count() << '\n' << "transactions=" << db.transaction_count << '\n';
    write_stats(stats, s);
  }
  return kExitOk;
}

struct GenerateFlags {
  std::uint32_t items = 0;
  std::uint32_t transactions = 0;
  double prob = 0.5;
  std::uint64_t seed = 1;
  std::string plant;
};

VerticalDatabase generate(const GenerateFlags& g) {
  if (!(g.prob >= 0.0 && g.prob <= 1.0)) throw UsageError("--prob must lie in [0, 1]");
  VerticalDatabase db = generate_bernoulli(g.items, g.transactions, g.prob, g.seed);
  if (g.plant.empty()) return db;

  // source,target,copy_prob with 1-based item numbers (x3 is 3).
  std::istringstream spec(g.plant);
  std::uint32_t source = 0;
  std::uint32_t target = 0;
  double copy_prob = 0.0;
  char c1 = 0;
  char c2 = 0;
  if (!(spec >> source >> c1 >> target >> c2 >> copy_prob) || c1 != ',' || c2 != ',' || !spec.eof()) {
    throw UsageError("--plant expects source,target,copy_prob");
  }
  if (source < 1 || target < 1 || source > g.items || target > g.items || source == target) {
    throw UsageError("--plant items must be distinct and within 1.." + std::to_string(g.items));
  }
  try {
    return plant_dependency(db, source - 1, target - 1, copy_prob, g.seed + 1, g.prob);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_generate(const GenerateFlags& g, const std::string& output) {
  const VerticalDatabase db = generate(g);
  Output out(output);
  write_basket(db, out.stream());
  out.finish();
  return kExitOk;
}

int cmd_bench(const MineFlags& f, const GenerateFlags& g, const std::string& sweep, unsigned repeats,
              const std::string& output) {
  const auto dots = sweep.find("..");
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  try {
    if (dots == std::string::npos) {
      from = to = static_cast<std::uint32_t>(std::stoul(sweep));
    } else {
      from = static_cast<std::uint32_t>(std::stoul(sweep.substr(0, dots)));
      to = static_cast<std::uint32_t>(std::stoul(sweep.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw UsageError("--k-sweep expects A..B");
  }
  if (from < 1 || to < from) throw UsageError("--k-sweep needs 1 <= A <= B");

  const MiningConfig cfg = to_config(f);
  const VerticalDatabase db = f.input.empty() ? generate(g) : load_database(f);
  const auto rows = run_k_sweep(db, cfg, from, to, SweepOptions{repeats});
  Output out(output);
  write_sweep_csv(rows, out.stream());
  out.finish();
  return kExitOk;
}

int cmd_oracle(const MineFlags& f, std::uint32_t max_len, const std::string& output) {
  if (f.min_support < 1) throw UsageError("--min-support must be >= 1");
  const VerticalDatabase db = load_database(f);
  const auto sets = oracle::enumerate_frequent(db, static_cast<Support>(f.min_support), max_len);
  Output out(output);
  for (const auto& s : sets) {
    out.stream() << s.support << '\t';
    for (std::size_t k = 0; k < s.items.size(); ++k) out.stream() << (k ? " " : "") << db.names[s.items[k]];
    out.stream() << '\n';
  }
  out.finish();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frequent-pattern mining over frequency-ordered conditional databases"};
  app.require_subcommand(1);

  MineFlags mine_flags;
  std::string mine_output;
  std::string stats_path;
  bool sort_by_support_flag = false;
  auto* mine_cmd = app.add_subcommand("mine", "Mine frequent patterns from a database file");
  mine_cmd->add_option("--input", mine_flags.input, "Database file")->required();
  add_mine_flags(*mine_cmd, mine_flags, true);
  mine_cmd->add_option("--output", mine_output, "Pattern file, or stdout");
  mine_cmd->add_option("--stats", stats_path, "Statistics report (key=value)");
  mine_cmd->add_flag("--sort-by-support", sort_by_support_flag, "Sort output by descending support");

  GenerateFlags gen_flags;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("generate", "Write a synthetic Bernoulli basket database");
  gen_cmd->add_option("--items", gen_flags.items, "Number of items M")->required();
  gen_cmd->add_option("--transactions", gen_flags.transactions, "Number of transactions N")->required();
  gen_cmd->add_option("--prob", gen_flags.prob, "Item occurrence probability")->required();
  gen_cmd->add_option("--seed", gen_flags.seed, "Random seed");
  gen_cmd->add_option("--plant", gen_flags.plant, "Planted dependency source,target,copy_prob (1-based)");
  gen_cmd->add_option("--output", gen_output, "Basket file, or stdout");

  MineFlags bench_flags;
  GenerateFlags bench_gen;
  bench_gen.items = 50;
  bench_gen.transactions = 10000;
  std::string sweep;
  std::string bench_output;
  unsigned bench_repeats = 1;
  auto* bench_cmd = app.add_subcommand("bench", "Time mining over a range of maximum lengths; CSV output");
  bench_cmd->add_option("--k-sweep", sweep, "Range of maximum lengths, A..B")->required();
  bench_cmd->add_option("--input", bench_flags.input, "Database file (default: generate one)");
  bench_cmd->add_option("--items", bench_gen.items, "Generated items M");
  bench_cmd->add_option("--transactions", bench_gen.transactions, "Generated transactions N");
  bench_cmd->add_option("--prob", bench_gen.prob, "Generated item probability");
  bench_cmd->add_option("--seed", bench_gen.seed, "Generator seed");
  bench_cmd->add_option("--plant", bench_gen.plant, "Planted dependency source,target,copy_prob");
  bench_cmd->add_option("--repeats", bench_repeats, "Passes over the K range; the fastest run per K is reported");
  add_mine_flags(*bench_cmd, bench_flags, false);
  bench_cmd->add_option("--output", bench_output, "CSV file, or stdout");

  MineFlags oracle_flags;
  std::uint32_t oracle_max_len = 3;
  std::string oracle_output;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration for debugging");
  oracle_cmd->group("");  // hidden
  oracle_cmd->add_option("--input", oracle_flags.input, "Database file")->required();
  oracle_cmd->add_option("--format", oracle_flags.format)->check(CLI::IsMember({"basket", "record"}));
  oracle_cmd->add_option("--schema", oracle_flags.schema);
  oracle_cmd->add_option("--min-support", oracle_flags.min_support);
  oracle_cmd->add_option("--max-len", oracle_max_len);
  oracle_cmd->add_option("--output", oracle_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mine_cmd) return cmd_mine(mine_flags, mine_output, stats_path, sort_by_support_flag);
    if (*gen_cmd) return cmd_generate(gen_flags, gen_output);
    if (*bench_cmd) return cmd_bench(bench_flags, bench_gen, sweep, bench_repeats, bench_output);
    if (*oracle_cmd) return cmd_oracle(oracle_flags, oracle_max_len, oracle_output);
  } catch (const UsageError& e) {
    std::cerr << "fpsieve: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "fpsieve: parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "fpsieve: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
