#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace sa {

// 64-bit FNV-1a, used for cache checksums and training-set fingerprints.
inline std::uint64_t fnv1a64(const void* bytes, std::size_t len,
                             std::uint64_t state = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  for (std::size_t i = 0; i < len; ++i) {
    state ^= p[i];
    state *= 1099511628211ull;
  }
  return state;
}

inline std::uint64_t fnv1a64_u64(std::uint64_t value, std::uint64_t state) {
  return fnv1a64(&value, sizeof(value), state);
}

inline std::string to_hex(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

}  // namespace sa
