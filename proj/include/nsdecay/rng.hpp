#pragma once

#include <cmath>
#include <cstdint>

#include "nsdecay/grid.hpp"

// Counter-based random numbers: every draw is a pure function of its key,
// so results do not depend on iteration order or thread count.

namespace nsdecay::rng {

inline std::uint64_t mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t key(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    return mix(mix(mix(seed) ^ stream) ^ counter);
}

/// Uniform in (0, 1).
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    return (static_cast<double>(key(seed, stream, counter) >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal by Box-Muller on two keyed uniforms.
inline double normal(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    const double u1 = uniform(seed, stream, 2 * counter);
    const double u2 = uniform(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

/// Uniform phase on the unit circle.
inline cplx unit_phase(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) noexcept {
    const double th = kTwoPi * uniform(seed, stream, counter);
    return {std::cos(th), std::sin(th)};
}

}  // namespace nsdecay::rng
