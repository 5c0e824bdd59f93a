#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>

namespace obfudet {

// FNV-1a, 64-bit. Used for corpus fingerprints and file checksums; fast,
// dependency-free, and stable across platforms.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t state = 1469598103934665603ULL) {
  for (const unsigned char c : bytes) {
    state ^= c;
    state *= 1099511628211ULL;
  }
  return state;
}

inline std::string to_hex64(std::uint64_t value) {
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(value));
  return std::string(buffer);
}

}  // namespace obfudet
