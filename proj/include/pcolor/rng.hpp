#pragma once

// Seed-splitting scheme: every random decision in the library draws from an
// engine keyed by (master seed, stage tag, up to two indices). Per-pair edge
// coins hash (seed, tag, u, v) directly so regeneration does not depend on
// evaluation order.

#include <cstdint>
#include <random>
#include <string_view>

namespace pcolor::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::string_view tag, std::uint64_t a = 0,
                            std::uint64_t b = 0) {
    std::uint64_t h = splitmix64(seed);
    for (char c : tag) h = splitmix64(h ^ static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return h;
}

inline std::mt19937_64 engine(std::uint64_t seed, std::string_view tag, std::uint64_t a = 0,
                              std::uint64_t b = 0) {
    return std::mt19937_64(derive(seed, tag, a, b));
}

// Uniform in [0,1) from a single hash; used for independent per-pair coins.
inline double unit_hash(std::uint64_t seed, std::string_view tag, std::uint64_t a, std::uint64_t b) {
    return static_cast<double>(derive(seed, tag, a, b) >> 11) * 0x1.0p-53;
}

inline bool coin(std::uint64_t seed, std::string_view tag, std::uint64_t u, std::uint64_t v,
                 double p) {
    return unit_hash(seed, tag, u, v) < p;
}

}  // namespace pcolor::rng
