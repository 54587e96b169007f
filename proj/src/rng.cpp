#include "uelc/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace uelc {

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_index: bound must be positive");
    // Reject the 2^64 mod bound lowest values so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r < threshold);
    return r % bound;
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be non-negative");
    std::uint64_t count = 0;
    double t = 0.0;
    for (;;) {
        t -= std::log1p(-uniform01());  // Exp(1) inter-arrival
        if (t > mean) return count;
        ++count;
    }
}

std::vector<std::size_t> Rng::sample_distinct(std::size_t bound, std::size_t count) {
    if (count > bound) count = bound;
    std::vector<std::size_t> pool(bound);
    for (std::size_t i = 0; i < bound; ++i) pool[i] = i;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(uniform_index(bound - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace uelc
