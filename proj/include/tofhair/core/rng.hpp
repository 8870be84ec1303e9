#pragma once

#include <cmath>
#include <cstdint>

namespace tofhair {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based per-pixel random stream: the sequence depends only on
/// (seed, x, y), so parallel and serial traversal of a frame draw identical
/// values. Gaussian variates use explicit Box-Muller so the stream is fixed
/// across standard library implementations.
class PixelRng {
public:
    explicit PixelRng(std::uint64_t seed) : state_(mix_init(seed, 0, 0)) {}
    PixelRng(std::uint64_t seed, int x, int y)
        : state_(mix_init(seed, static_cast<std::uint32_t>(x),
                          static_cast<std::uint32_t>(y))) {}

    std::uint64_t next_u64() { return splitmix64(state_); }

    /// Uniform double in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (one value per call; the paired value
    /// is discarded to keep the draw count predictable).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    double normal(double mean, double std) { return mean + std * normal(); }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
    static std::uint64_t mix_init(std::uint64_t seed, std::uint32_t x, std::uint32_t y) {
        std::uint64_t s = seed;
        s ^= 0x632be59bd9b4e019ULL + (static_cast<std::uint64_t>(x) << 32 | y);
        splitmix64(s);  // decorrelate adjacent pixels
        return s;
    }

    std::uint64_t state_;
};

}  // namespace tofhair
