#pragma once

#include <cstdint>
#include <random>

namespace collusim {

using Rng = std::mt19937_64;

// splitmix64, used to derive independent per-agent/per-session streams
// from one session seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits. Hand-rolled so that results
// do not depend on the standard library's distribution internals.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n). Multiply-shift; bias is O(n / 2^64).
inline int uniform_index(Rng& rng, int n) {
    return static_cast<int>(
        (static_cast<unsigned __int128>(rng()) * static_cast<std::uint64_t>(n)) >> 64);
}

}  // namespace collusim
