#pragma once

#include <cstdint>
#include <random>

namespace qqsim {

/// Deterministic random source. Draws are derived from the raw mt19937_64
/// stream with explicit arithmetic, so results depend only on the seed, not
/// on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool coin() { return next() & 1u; }

    /// Uniform double in [0, 1).
    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace qqsim
