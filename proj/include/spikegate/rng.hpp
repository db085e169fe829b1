// Deterministic RNG helpers shared by sampling and the sweep harness.
//
// mt19937_64 output is fully specified by the standard, but the
// <random> distribution classes are not; every draw that must be
// reproducible across platforms goes through the helpers below.
#pragma once

#include <cstdint>
#include <random>

namespace spikegate {

// Mixer of the splitmix64 generator (public domain, Vigna).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// n-th output of the splitmix64 stream seeded with `base` (n >= 0).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t n) {
    return splitmix64(base + n * 0x9e3779b97f4a7c15ULL);
}

// Unbiased integer in [0, n) via rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform double in [lo, hi).
inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_real01(rng);
}

}  // namespace spikegate
