#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fpsieve/types.hpp"

namespace fpsieve {

/// First id verbatim, then successive differences. Throws EncodingError unless
/// the input is strictly increasing and starts at >= 1.
std::vector<TxnId> delta_encode(std::span<const TxnId> tids);

/// Inverse of delta_encode (running sum).
std::vector<TxnId> delta_decode(std::span<const TxnId> deltas);

/// Number of LEB128 bytes needed for `value`.
constexpr std::size_t varint_size(std::uint32_t value) noexcept {
  std::size_t n = 1;
  while (value >= 0x80) {
    value >>= 7;
    ++n;
  }
  return n;
}

inline void varint_append(std::vector<std::uint8_t>& out, std::uint32_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(value | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(value));
}

/// Reads one LEB128 value and advances `p`. No bounds checking.
inline std::uint32_t varint_read(const std::uint8_t*& p) noexcept {
  std::uint32_t value = *p & 0x7f;
  unsigned shift = 7;
  while (*p++ & 0x80) {
    value |= static_cast<std::uint32_t>(*p & 0x7f) << shift;
    shift += 7;
  }
  return value;
}

/// Delta-encodes `tids` straight into LEB128 bytes.
std::vector<std::uint8_t> varint_delta_encode(std::span<const TxnId> tids);

/// Decodes `count` ids from varint_delta_encode output.
std::vector<TxnId> varint_delta_decode(std::span<const std::uint8_t> bytes, std::size_t count);

}  // namespace fpsieve
