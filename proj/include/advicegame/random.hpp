#pragma once

#include <cstdint>

namespace advicegame {

// splitmix64 finalizer: bijective on 64-bit words, strong diffusion.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of a word.
constexpr double to_unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Draw i of the stream identified by seed. Counter-based, so any subset of
// draws can be evaluated in any order (or in parallel) with the same result.
// The seed is diffused before the counter is added: xor-combining instead
// would let nearby seeds permute the same block of counter words and yield
// identical draw sets.
constexpr double uniform01_at(std::uint64_t seed, std::uint64_t i) {
    return to_unit_interval(mix64(mix64(seed) + i));
}

// Small sequential generator for parameter sampling in tests and
// verification sweeps. Deliberately avoids std::uniform_real_distribution,
// whose output is implementation-defined.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform01() { return to_unit_interval(next()); }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Log-uniform on [lo, hi]; lo must be positive.
    double log_uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

}  // namespace advicegame
