#pragma once

#include <cstdint>

namespace nekbound {

/// splitmix64 (Vigna/Steele): one 64-bit word of state, golden-ratio
/// increment, two xor-multiply finalizer rounds. Chosen as the repo's
/// seeded generator because it is trivial to reproduce in any language;
/// the exact algorithm is spelled out in the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Independent child stream seeded from the next output word.
    SplitMix64 split() { return SplitMix64(next_u64()); }

private:
    std::uint64_t state_;
};

}  // namespace nekbound
