#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace cplxinfo {

inline constexpr std::uint64_t kSeedMixConstant = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += kSeedMixConstant;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Stable sub-stream seed for task k of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t k) {
    return splitmix64(seed ^ splitmix64(k + kSeedMixConstant));
}

// mt19937_64 plus explicit real-valued transforms. The standard pins down the
// engine output sequence exactly, but not std::*_distribution, so the
// transforms are spelled out here to keep seeded results identical across
// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // (0, 1), both endpoints excluded so log/inverse-CDF transforms stay finite
    double uniform01_strict() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    // Box-Muller; consumes exactly two engine outputs per draw.
    double normal(double mu, double sigma) {
        const double u1 = uniform01_strict();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mu + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // [0, n); modulo bias is ~n / 2^64, irrelevant at the sizes used here
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

private:
    std::mt19937_64 eng_;
};

} // namespace cplxinfo
