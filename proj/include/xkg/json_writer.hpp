#pragma once

// Minimal canonical JSON emitter: no whitespace, keys in caller order, reals
// in shortest round-trip form. Shared by every wire format in the project so
// byte output is identical across platforms.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xkg::json {

inline void append_number(std::string& out, double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot encode non-finite number");
  if (v == 0.0) v = 0.0;  // folds -0 into 0
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), end);
}

inline void append_integer(std::string& out, std::int64_t v) {
  std::array<char, 24> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.append(buf.data(), end);
}

inline void append_string(std::string& out, std::string_view s) {
  static constexpr char kHex[] = "0123456789abcdef";
  out.push_back('"');
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (c < 0x20) {
          out += "\\u00";
          out.push_back(kHex[c >> 4]);
          out.push_back(kHex[c & 0xF]);
        } else {
          out.push_back(ch);
        }
    }
  }
  out.push_back('"');
}

inline void append_bool(std::string& out, bool b) { out += b ? "true" : "false"; }

/// Emits `"key":` (with a leading comma unless first).
inline void append_key(std::string& out, std::string_view key, bool first = false) {
  if (!first) out.push_back(',');
  append_string(out, key);
  out.push_back(':');
}

inline std::string hex64(std::uint64_t v) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string s = "0x0000000000000000";
  for (int i = 17; i >= 2; --i, v >>= 4) s[static_cast<std::size_t>(i)] = kHex[v & 0xF];
  return s;
}

}  // namespace xkg::json
