#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace krull {

/// The fixed report PRNG (splitmix64):
///   s <- s + 0x9E3779B97F4A7C15
///   z <- s; z <- (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z <- (z ^ z>>27) * 0x94D049BB133111EB
///   output z ^ z>>31
/// Bounded draws use rejection sampling on the low bits so that every
/// implementation of this generator reproduces the same streams.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, m), m >= 1.
    std::uint64_t below(std::uint64_t m) {
        assert(m >= 1);
        const std::uint64_t mask = std::bit_ceil(m) - 1;
        std::uint64_t v;
        do { v = next() & mask; } while (v >= m);
        return v;
    }

    /// Uniform draw in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        assert(lo <= hi);
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

} // namespace krull
