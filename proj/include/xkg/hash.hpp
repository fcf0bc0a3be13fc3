#pragma once

#include <bit>
#include <cstdint>
#include <string_view>

namespace xkg {

/// 64-bit FNV-1a over an explicit little-endian byte encoding of each field,
/// so equal contents hash equally on any host.
class Hasher {
 public:
  Hasher& add(std::uint64_t v) {
    for (int i = 0; i < 8; ++i, v >>= 8) byte(static_cast<std::uint8_t>(v));
    return *this;
  }
  Hasher& add(std::int64_t v) { return add(static_cast<std::uint64_t>(v)); }
  Hasher& add(int v) { return add(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
  Hasher& add(bool v) {
    byte(v ? 1 : 0);
    return *this;
  }
  Hasher& add(double v) {
    if (v == 0.0) v = 0.0;
    return add(std::bit_cast<std::uint64_t>(v));
  }
  Hasher& add(std::uint8_t v) {
    byte(v);
    return *this;
  }
  Hasher& add(std::string_view s) {
    add(static_cast<std::uint64_t>(s.size()));
    for (char c : s) byte(static_cast<std::uint8_t>(c));
    return *this;
  }

  [[nodiscard]] std::uint64_t value() const { return h_; }

 private:
  void byte(std::uint8_t b) {
    h_ ^= b;
    h_ *= 0x100000001B3ULL;
  }

  std::uint64_t h_ = 0xCBF29CE484222325ULL;
};

}  // namespace xkg
