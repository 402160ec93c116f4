#pragma once

// Counter-based pseudo-random generator (splitmix64 finalizer). Draw i is a
// pure function of (seed, i), so any subrange can be evaluated independently
// and the stream is identical across platforms and traversal orders.

#include <cstdint>

namespace cubefree {

inline constexpr std::uint64_t kDefaultSeed = 1;

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in [0, 1) with 53 random bits; never returns 1, so a threshold of
// 1 accepts every draw.
inline double unit_draw(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

}  // namespace cubefree
