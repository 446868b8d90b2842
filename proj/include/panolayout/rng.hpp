#pragma once

#include <cstdint>

namespace panolayout {

// Counter-based generator: every (seed, index) pair maps to an independent
// 64-bit value, so sampling loops stay reproducible regardless of evaluation
// order or parallel scheduling. SplitMix64 finalizer.
inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1).
inline double counter_uniform(std::uint64_t seed, std::uint64_t index) {
    return double(counter_rng(seed, index) >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n).
inline std::uint64_t counter_below(std::uint64_t seed, std::uint64_t index, std::uint64_t n) {
    return counter_rng(seed, index) % n;
}

// Small stateful convenience wrapper over the counter generator.
class SeededStream {
public:
    explicit SeededStream(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return counter_rng(seed_, index_++); }
    double next_uniform() { return counter_uniform(seed_, index_++); }
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }
    std::uint64_t next_below(std::uint64_t n) { return counter_below(seed_, index_++, n); }

private:
    std::uint64_t seed_;
    std::uint64_t index_ = 0;
};

} // namespace panolayout
