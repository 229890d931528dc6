#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace clozeforge {

// FNV-1a. Used for content ids, dedup keys, and deriving per-paragraph RNG
// seeds. Stable across platforms, unlike std::hash.
inline std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis = 0xcbf29ce484222325ULL) {
  std::uint64_t h = basis;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::string_view data) {
  return fnv1a64(data, seed ^ 0x9e3779b97f4a7c15ULL);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((value >> (8 * i)) & 0xFF);
  return fnv1a64(std::string_view(buf, 8), seed ^ 0x9e3779b97f4a7c15ULL);
}

inline std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xF];
    v >>= 4;
  }
  return out;
}

}  // namespace clozeforge
