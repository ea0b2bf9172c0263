#pragma once

#include <cstdint>
#include <random>

namespace stralg {

// All sampling goes through mt19937_64 plus explicit reduction, never
// std::uniform_int_distribution, so identical seeds give identical streams
// on every platform.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline Rng seeded_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

// Deterministic per-cell stream for parallel grids.
inline Rng cell_rng(std::uint64_t seed, std::uint64_t cell) {
    return Rng(splitmix64(splitmix64(seed) ^ (cell + 1)));
}

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

} // namespace stralg
