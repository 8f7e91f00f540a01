#pragma once

#include <cstdint>
#include <random>

namespace freeconv {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-derived stream: one engine per (seed, sample index), so samples are
// reproducible and independent of evaluation order and thread count.
inline std::mt19937_64 engine_for(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t mixed = splitmix64(seed ^ splitmix64(index + 0x517cc1b727220a95ull));
  return std::mt19937_64(mixed);
}

}  // namespace freeconv
