#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpsieve {

/// Dense item index in [0, M) after ingestion.
using ItemId = std::uint32_t;

/// Transaction number. Always 1-based; 0 is never a valid transaction.
using TxnId = std::uint32_t;

/// Number of transactions containing a pattern.
using Support = std::uint32_t;

inline constexpr std::uint32_t kUnlimitedDepth = std::numeric_limits<std::uint32_t>::max();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Items that occur in every transaction of a conditional database, attached to
/// the pattern element at index `anchor` instead of being mined as elements.
struct Group {
  std::uint32_t anchor = 0;
  std::vector<ItemId> items;

  friend bool operator==(const Group&, const Group&) = default;
};

struct Pattern {
  std::vector<ItemId> items;
  Support support = 0;
  std::vector<Group> groups;

  /// All grouped items, in anchor order.
  std::vector<ItemId> group_items() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Non-owning pattern handed to sinks; valid only for the duration of the call.
struct PatternView {
  std::span<const ItemId> items;
  Support support = 0;
  std::span<const Group> groups;

  Pattern to_pattern() const;
};

enum class Encoding {
  kPlain,   // absolute transaction ids, one 32-bit word each
  kDelta,   // first id, then successive differences, 32-bit words
  kVarint,  // deltas packed as LEB128 bytes
};

/// Tie order among equal frequencies when ordering the root level.
enum class TieBreak {
  kAscendingIndex,
  kDescendingIndex,
};

struct MiningConfig {
  Support min_support = 1;
  std::uint32_t max_depth = kUnlimitedDepth;
  bool filter_enabled = false;
  double sigma_multiplier = 3.0;
  bool grouping_enabled = false;
  bool delta_encoding = false;
  /// Pack deltas into the minimum number of bytes. Requires delta_encoding.
  bool byte_mode = false;
  /// Skip intersections between items of the same record variable.
  bool skip_exclusive = false;
  TieBreak root_tie_break = TieBreak::kAscendingIndex;
  unsigned threads = 1;

  /// Throws std::invalid_argument on a violated invariant.
  void validate() const;

  Encoding encoding() const noexcept {
    if (!delta_encoding) return Encoding::kPlain;
    return byte_mode ? Encoding::kVarint : Encoding::kDelta;
  }
};

}  // namespace fpsieve
