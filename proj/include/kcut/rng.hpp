#pragma once

#include <cstdint>

namespace kcut {

/// splitmix64: tiny-state generator used for the contraction repetitions.
/// Each repetition derives its own stream from (seed, indices), so runs are
/// reproducible bit-for-bit no matter how repetitions are scheduled.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound). bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection-free multiply-shift would bias huge bounds; the bounds
        // here are tiny (vertex/edge counts), so modulo bias is negligible
        // and, more importantly, deterministic.
        return next() % bound;
    }
};

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

/// Derive an independent stream id from a root seed and up to three indices.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                                   std::uint64_t c = 0) {
    std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ (a + 0x9e3779b97f4a7c15ULL));
    h = mix64(h ^ (b + 0xbb67ae8584caa73bULL));
    h = mix64(h ^ (c + 0x3c6ef372fe94f82bULL));
    return h;
}

}  // namespace kcut
