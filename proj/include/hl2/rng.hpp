#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hl2 {

// Deterministic, portable randomness. The engine is std::mt19937_64, whose
// output sequence is pinned by the C++ standard, and all draws below avoid
// std distributions (their output is implementation-defined). Same seed,
// same results, on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Unbiased draw in [0, bound) via power-of-two masking + rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        for (;;) {
            std::uint64_t x = engine_() & mask;
            if (x < bound) return x;
        }
    }

    // Uniform double in [0, 1) with 53 random mantissa bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Fisher-Yates with the portable bounded draw.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent streams from (seed, counter).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace hl2
