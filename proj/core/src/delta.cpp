#include "fpsieve/delta.hpp"

#include <string>

namespace fpsieve {
namespace {

void check_increasing(std::span<const TxnId> tids) {
  TxnId prev = 0;
  for (std::size_t i = 0; i < tids.size(); ++i) {
    if (tids[i] <= prev) {
      throw EncodingError("tid sequence not strictly increasing (or zero) at position " +
                          std::to_string(i));
    }
    prev = tids[i];
  }
}

}  // namespace

std::vector<TxnId> delta_encode(std::span<const TxnId> tids) {
  check_increasing(tids);
  std::vector<TxnId> out;
  out.reserve(tids.size());
  TxnId prev = 0;
  for (TxnId t : tids) {
    out.push_back(t - prev);
    prev = t;
  }
  return out;
}

std::vector<TxnId> delta_decode(std::span<const TxnId> deltas) {
  std::vector<TxnId> out;
  out.reserve(deltas.size());
  TxnId acc = 0;
  for (TxnId d : deltas) {
    acc += d;
    out.push_back(acc);
  }
  return out;
}

std::vector<std::uint8_t> varint_delta_encode(std::span<const TxnId> tids) {
  check_increasing(tids);
  std::vector<std::uint8_t> out;
  TxnId prev = 0;
  for (TxnId t : tids) {
    varint_append(out, t - prev);
    prev = t;
  }
  return out;
}

std::vector<TxnId> varint_delta_decode(std::span<const std::uint8_t> bytes, std::size_t count) {
  std::vector<TxnId> out;
  out.reserve(count);
  const std::uint8_t* p = bytes.data();
  const std::uint8_t* end = bytes.data() + bytes.size();
  TxnId acc = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (p >= end) throw EncodingError("varint stream truncated");
    acc += varint_read(p);
    out.push_back(acc);
  }
  return out;
}

}  // namespace fpsieve
