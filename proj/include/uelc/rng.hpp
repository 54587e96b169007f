#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace uelc {

// Portable random stream. std::mt19937_64 output is fixed by the standard;
// the distributions below are hand-rolled because the standard library ones
// are implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t uniform_index(std::uint64_t bound);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01();

    /// Poisson(mean) by counting unit-rate exponential arrivals; O(mean).
    std::uint64_t poisson(double mean);

    /// `count` distinct values from [0, bound), in draw order.
    std::vector<std::size_t> sample_distinct(std::size_t bound, std::size_t count);

private:
    std::mt19937_64 engine_;
};

/// Stream derivation for independent sub-streams (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

}  // namespace uelc
