#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace coopmac {

/// Counter-mode splitmix64. The value stream is a pure function of
/// (seed, draw index), so identical seeds yield identical streams on every
/// platform; forked child streams are decorrelated by construction.
class CounterRng {
public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        return mix(seed_ + kGolden * ++counter_);
    }

    /// Uniform in [0, 1), a dyadic rational with 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Circularly symmetric complex Gaussian with E|z|^2 = 1
    /// (so |z|^2 is Exponential(1)).
    std::complex<double> next_complex_gaussian() noexcept {
        const double u = next_unit();
        const double v = next_unit();
        const double r = std::sqrt(-std::log1p(-u));
        const double theta = 2.0 * std::numbers::pi * v;
        return {r * std::cos(theta), r * std::sin(theta)};
    }

    /// Unbiased integer in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    /// Independent child stream; deterministic in (parent seed, salt).
    constexpr CounterRng fork(std::uint64_t salt) const noexcept {
        return CounterRng(mix(seed_ ^ mix(salt + kGolden)));
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace coopmac
