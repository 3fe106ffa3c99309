#pragma once

#include <cstdint>

namespace snb {

// SplitMix64 (Steele, Lea, Flood 2014). Every seeded computation in the
// library draws from this generator so outputs are identical across
// standard library implementations.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, bound). bound must be positive.
    constexpr std::uint64_t below(std::uint64_t bound) noexcept {
        const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t r = next();
            if (r >= limit) return r % bound;
        }
    }

private:
    std::uint64_t state_;
};

// Stateless mix of several words into one; used for per-(seed, t, i, j)
// tie-breaking draws.
constexpr std::uint64_t mix_hash(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0,
                                 std::uint64_t d = 0) noexcept {
    SplitMix64 g(a);
    std::uint64_t h = g.next();
    g = SplitMix64(h ^ b);
    h = g.next();
    g = SplitMix64(h ^ c);
    h = g.next();
    g = SplitMix64(h ^ d);
    return g.next();
}

}  // namespace snb
