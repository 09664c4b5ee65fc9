#pragma once

/// Deterministic seedable RNG (splitmix64) so that every "random" instance in
/// tests and sweeps is reproducible bit-for-bit across platforms.

#include "cpa/rational.hpp"

#include <cstdint>

namespace cpa {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish in [0, n); n > 0.  Modulo bias is irrelevant here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Uniform-ish integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// Small rational with |numerator| <= max_num and denominator in [1, max_den].
    Rational rational(int max_num, int max_den) {
        long long n = range(-max_num, max_num);
        long long d = range(1, max_den);
        return Rational(BigInt(n), BigInt(d));
    }
};

} // namespace cpa
