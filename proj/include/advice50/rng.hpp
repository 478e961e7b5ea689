#pragma once

#include <cstdint>
#include <random>

namespace advice50 {

/// Deterministic seeded generator behind every sampling entry point.
///
/// Doubles are produced from the top 53 bits of the raw mt19937_64 output so
/// identical seeds give identical sequences on every platform. Monte Carlo
/// batches derive the generator for trial i from seed ^ i.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : gen_(seed) {}

    static SplitRng derived(std::uint64_t seed, std::uint64_t trial) {
        return SplitRng(seed ^ trial);
    }

    /// Uniform double in [0, 1).
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

}  // namespace advice50
