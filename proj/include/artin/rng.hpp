#pragma once

#include <cstdint>

namespace artin {

// Counter-based, splittable 64-bit generator. The output for one label draw
// is a pure function of (seed, sample index, pair index, attempt), so any
// partition of samples across workers reproduces the same stream. The exact
// algorithm is pinned in the README for cross-language reproduction.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer (Steele-Lea-Flood / Vigna).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// One 64-bit output of the keyed counter stream: three absorption rounds.
inline constexpr std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t sample,
                                            std::uint64_t pair, std::uint64_t attempt) {
    std::uint64_t h = mix64(seed + kGolden + sample);
    h = mix64(h + kGolden + pair);
    h = mix64(h + kGolden + attempt);
    return h;
}

/// Uniform draw from {0, ..., bound-1} by Lemire's multiply-shift with exact
/// rejection (unbiased). Rejection retries advance the attempt counter of the
/// same (seed, sample, pair) stream, keeping the result worker-independent.
inline std::uint64_t bounded_draw(std::uint64_t seed, std::uint64_t sample, std::uint64_t pair,
                                  std::uint64_t bound) {
    using u128 = unsigned __int128;
    std::uint64_t attempt = 0;
    u128 product = static_cast<u128>(counter_rand(seed, sample, pair, attempt)) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        while (low < threshold) {
            product = static_cast<u128>(counter_rand(seed, sample, pair, ++attempt)) * bound;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::uint64_t>(product >> 64);
}

}  // namespace artin
