#pragma once

/**
 * @file prng.hpp
 * @brief Seeded deterministic sampling.
 *
 * SplitMix64 with the standard constants. The stream for a given seed is
 * part of the output contract: bounded draws are next() % span, so the
 * same seed and flags reproduce byte-identical reports everywhere.
 */

#include <cstdint>

#include "finrr/divisor.hpp"

namespace finrr {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Integer in [lo, hi], drawn as lo + next() % span.
    long range(long lo, long hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

private:
    std::uint64_t state_;
};

/// Divisor with components k/denominator, k drawn from [numer_lo, numer_hi].
/// With denominator 1 this samples the integer points of a box.
inline Divisor sample_divisor(SplitMix64& rng, std::size_t n, long numer_lo, long numer_hi,
                              long denominator = 1) {
    std::vector<Rational> comps(n);
    for (std::size_t i = 0; i < n; ++i)
        comps[i] = Rational(rng.range(numer_lo, numer_hi), denominator);
    return Divisor(std::move(comps));
}

} // namespace finrr
