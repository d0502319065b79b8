#pragma once

#include <cmath>
#include <cstdint>

namespace stylediff {

// Counter-style generator: a single 64-bit word of state, advanced by the
// splitmix64 increment. Identical seeds give identical streams on any
// platform with IEEE doubles.
struct SeededRng {
    std::uint64_t state = 0;

    SeededRng() = default;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]; never 0 so it is safe under log().
    double next_unit_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Uniform in [0, 1).
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }
};

// One Box-Muller pair of standard normals.
inline void box_muller(SeededRng& rng, double& z0, double& z1) {
    const double two_pi = 6.283185307179586476925286766559;
    double u1 = rng.next_unit_open();
    double u2 = rng.next_unit();
    double r = std::sqrt(-2.0 * std::log(u1));
    z0 = r * std::cos(two_pi * u2);
    z1 = r * std::sin(two_pi * u2);
}

}  // namespace stylediff
