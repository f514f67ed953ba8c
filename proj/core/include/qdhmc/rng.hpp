#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qdhmc {

using Rng = std::mt19937_64;

// splitmix64: mixes a 64-bit counter into an independent-looking stream seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic sub-stream seed for task (a, b) under a master seed.
// Used to parallelize chains while keeping every stream independent of
// scheduling order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t s = splitmix64(master ^ 0x243f6a8885a308d3ULL);
    s = splitmix64(s ^ splitmix64(a + 0x13198a2e03707344ULL));
    s = splitmix64(s ^ splitmix64(b + 0xa4093822299f31d0ULL));
    return s;
}

// The helpers below avoid std::*_distribution, whose outputs are
// implementation-defined; results here are identical on every platform.

// Uniform on [0, 1).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1]; safe under log().
inline double uniform01_pos(Rng& rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer on [lo, hi], inclusive.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    // Multiply-shift bounds the output without a modulo bias worth caring
    // about at these span sizes (span << 2^64).
    const auto x = rng();
    const auto hi64 = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * span) >> 64);
    return lo + static_cast<std::int64_t>(hi64);
}

// Standard normal via Box-Muller; draws two uniforms, discards the spare.
inline double standard_normal(Rng& rng) {
    const double u1 = uniform01_pos(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

}  // namespace qdhmc
