#pragma once

#include <cstdint>
#include <random>

namespace nbldpc {

// Seed derivation and bounded draws are pinned down here so that every
// randomized result in the toolkit is reproducible from a single 64-bit seed,
// independent of platform and of how work is split across threads.

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Counter-style stream derivation: hash-chains the master seed with up to
/// three stream coordinates (e.g. rate index, trial index, purpose tag).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) noexcept {
    std::uint64_t s = splitmix64(master ^ 0x243f6a8885a308d3ull);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

/// Unbiased draw in [0, n) via rejection; avoids the implementation-defined
/// behavior of std::uniform_int_distribution so streams are portable.
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) noexcept {
    const std::uint64_t limit = n == 0 ? 0 : UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % n;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& g) noexcept {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

}  // namespace nbldpc
