#pragma once

// Portable deterministic randomness. std::mt19937_64 output is fixed by the
// standard, the distributions are not, so the conversions live here.

#include <cstdint>
#include <random>

namespace socgrav::detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) with 53 random bits.
inline double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

inline double uniform01(std::mt19937_64& rng) { return unit_double(rng()); }

// Uniform integer in [0, bound), rejection sampling without modulo bias.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace socgrav::detail
