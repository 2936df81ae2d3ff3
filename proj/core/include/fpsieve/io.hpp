#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fpsieve/miner.hpp"
#include "fpsieve/types.hpp"
#include "fpsieve/vertical_database.hpp"

namespace fpsieve {

// Basket format: one transaction per line, whitespace-separated item tokens.
// Blank lines are skipped, so an empty transaction cannot be represented.
// Tokens may not contain '(' or ')' or control bytes.

VerticalDatabase parse_basket(std::istream& in);

/// Writes `db` in basket format, items of a transaction in item-id order.
void write_basket(const VerticalDatabase& db, std::ostream& out);

/// Record database layout: variable i (1-based) takes one of arities[i-1]
/// values, and value k of variable i is coded as stride * i + k.
struct RecordSchema {
  std::vector<std::uint32_t> arities;
  std::uint32_t stride = 100;

  std::size_t variable_count() const noexcept { return arities.size(); }
  /// Throws Error unless 1 <= n_i < stride for every variable.
  void validate() const;
};

constexpr std::uint32_t encode_record_item(std::uint32_t variable, std::uint32_t value,
                                           std::uint32_t stride) noexcept {
  return stride * variable + value;
}

/// (variable, value) of a record item code.
constexpr std::pair<std::uint32_t, std::uint32_t> decode_record_item(std::uint32_t code,
                                                                     std::uint32_t stride) noexcept {
  return {code / stride, code % stride};
}

/// Schema text: optional "stride S" line, then one arity per line (or several
/// per line, whitespace separated). '#' starts a comment.
RecordSchema parse_schema(std::istream& in);

/// One record per line with exactly schema.variable_count() value indices.
/// Item names are the decimal codes; db.variables records each item's variable.
VerticalDatabase parse_record(std::istream& in, const RecordSchema& schema);

/// "support<TAB>item item ..." with each group parenthesized after its anchor.
std::string format_pattern(const PatternView& pattern, std::span<const std::string> names);

void write_patterns(std::span<const Pattern> patterns, std::span<const std::string> names,
                    std::ostream& out);

/// Stable re-sort by descending support.
void sort_by_support(std::vector<Pattern>& patterns);

/// Sink that writes each pattern line as it arrives.
class PatternWriter final : public PatternSink {
 public:
  PatternWriter(std::ostream& out, std::span<const std::string> names) : out_(out), names_(names) {}
  void consume(const PatternView& pattern) override;

 private:
  std::ostream& out_;
  std::span<const std::string> names_;
  std::string line_;
};

/// Flat key=value report.
void write_stats(const MiningStats& stats, std::ostream& out);

}  // namespace fpsieve
