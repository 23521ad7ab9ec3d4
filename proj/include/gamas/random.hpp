#pragma once

// Seeded randomness for trial generation. The seed-to-instance map is part of
// the CLI contract: std::mt19937_64 (whose output sequence the C++ standard
// fixes) seeded through SplitMix64 mixing, with range reduction done here
// rather than by <random> distributions, whose algorithms vary by library.

#include <cstdint>
#include <random>

#include "gamas/linalg.hpp"

namespace gamas {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Folds a sequence of words into one seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> words) {
    std::uint64_t s = splitmix64(seed);
    for (auto w : words) s = splitmix64(s ^ w);
    return s;
}

class TrialRng {
public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) from the top 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [lo, hi] by rejection sampling.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(next());
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// p/q with p uniform in [-range, range] \ {0} and q uniform in [1, range].
    Rational nonzero_rational(std::int64_t range) {
        std::int64_t p = uniform_int(-range, range - 1);
        if (p >= 0) ++p;
        const std::int64_t q = uniform_int(1, range);
        Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
        r.canonicalize();
        return r;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace gamas
