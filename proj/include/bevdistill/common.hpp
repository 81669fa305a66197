#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bevdistill {

// Filesystem / serialization failure. The CLI maps this to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kSplitMix64Gamma = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

// Seed-splitting rule used everywhere a stream is derived from a parent seed
// (e.g. per-frame seeds in dataset generation, per-epoch shuffle seeds):
//
//   mix64(seed, index) = splitmix64_finalize(seed + (index + 1) * 0x9E3779B97F4A7C15)
//
// This is bit-exact by definition; no wall clock or OS entropy anywhere.
inline constexpr std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_finalize(seed + (index + 1) * kSplitMix64Gamma);
}

// Deterministic, platform-independent RNG (SplitMix64 stream). We do not use
// <random> distributions because their output is not pinned by the standard.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += kSplitMix64Gamma;
        return splitmix64_finalize(state_);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform in {0, ..., n-1}. Modulo bias is negligible for the n used here.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // Standard normal via Box-Muller; the second variate is cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = 1.0 - next_double();  // (0, 1], keeps log finite
        double u2 = next_double();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 2.0 * M_PI * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

  private:
    std::uint64_t state_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace bevdistill
