#pragma once

#include <cstdint>

namespace boxsum {

// SplitMix64 (Steele, Lea & Vigna; public-domain reference constants).
// Pinned as the workload generator so op sequences are reproducible
// bit-for-bit across platforms and implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform draw from [lo, hi] by modulo reduction; lo <= hi required.
    // The tiny modulo bias is irrelevant here, determinism is what matters.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % range);
    }

private:
    std::uint64_t state_;
};

}  // namespace boxsum
