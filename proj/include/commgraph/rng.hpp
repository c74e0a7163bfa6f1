#pragma once

#include <cstdint>

namespace cg {

// SplitMix64: seeded, splittable, identical output on every platform.
// Splitting derives an independent child stream; certificates record the
// root seed so reruns are reproducible regardless of call interleaving.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased enough for test sampling; n == 0 is the caller's bug.
    std::uint64_t bounded(std::uint64_t n) { return next() % n; }

    SplitMix64 split() { return SplitMix64(next() ^ 0x5851f42d4c957f2dULL); }
};

} // namespace cg
