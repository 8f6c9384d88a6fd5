#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qact {

// SplitMix64 (Steele/Lea/Flood). Chosen over std:: engines because its output
// is fully pinned by the algorithm: identical streams on every platform, and
// trivially splittable into independent per-task streams via derive_seed.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_open() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws two uniforms per pair and caches
    // the second value so consumption order is reproducible.
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_open();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        cached_ = r * std::sin(t);
        has_cached_ = true;
        return r * std::cos(t);
    }

  private:
    std::uint64_t state_;
    bool has_cached_ = false;
    double cached_ = 0.0;
};

// Independent stream for task index `stream` under a run seed. Used for shot
// batches, optimizer restarts and calibration circuits so that parallel
// execution order cannot change any result.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    const std::uint64_t t = SplitMix64(stream).next();
    return SplitMix64(seed ^ t).next();
}

}  // namespace qact
