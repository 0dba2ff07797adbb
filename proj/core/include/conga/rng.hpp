#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace conga {

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Folds a tuple like (seed, generation, agent, epoch) into one stream seed.
// Order-sensitive, so (a, b) and (b, a) land on different streams.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t p : parts)
        h = mix64(h + 0x9e3779b97f4a7c15ULL + p);
    return h;
}

// SplitMix64. One instance per logical stream; all randomness in the solver
// goes through derived streams so results never depend on how work is split
// across threads, and never on the standard library's distribution internals.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        return mix64(z);
    }

    // Uniform on the open interval (0,1): 2^53 equispaced midpoints, so both
    // endpoints are unreachable and log(u), log(1-u) are always finite.
    double next_open01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Uniform real in [lo, hi).
    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_open01();
    }

    // Standard normal via Box-Muller. Always consumes exactly two uniforms,
    // which keeps the stream layout reproducible.
    double next_normal() {
        constexpr double two_pi = 6.283185307179586476925286766559;
        double u1 = next_open01();
        double u2 = next_open01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
    }

    // UniformRandomBitGenerator interface.
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }
    std::uint64_t operator()() { return next_u64(); }

private:
    std::uint64_t state_;
};

}  // namespace conga
