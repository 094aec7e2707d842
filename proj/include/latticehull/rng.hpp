#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace lh {

/// Names one reproducible random stream. Identical (seed, stream) pairs
/// replay identical draws; distinct stream indices give statistically
/// independent streams, which is how Monte Carlo samples are distributed
/// across workers without losing determinism.
struct SeededStream {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    SeededStream with_stream(std::uint64_t s) const { return SeededStream{seed, s}; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t v) {
    std::uint64_t s = v;
    return splitmix64(s);
}

inline std::uint64_t rotl64(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

}  // namespace detail

/// xoshiro256** generator. Hand-rolled (rather than <random> distributions)
/// so that every draw is bit-reproducible across standard libraries.
class RandomStream {
public:
    explicit RandomStream(SeededStream s) {
        std::uint64_t st = detail::mix64(s.seed) ^ detail::rotl64(detail::mix64(s.stream ^ 0x9E3779B97F4A7C15ULL), 32);
        for (auto& word : state_) word = detail::splitmix64(st);
        // xoshiro must not start from the all-zero state
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl64(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via the Marsaglia polar method (keeps a spare).
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        has_spare_ = true;
        return u * m;
    }

private:
    std::array<std::uint64_t, 4> state_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace lh
