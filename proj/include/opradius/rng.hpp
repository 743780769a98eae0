#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

#include "opradius/matrix.hpp"

namespace opradius {

/// splitmix64 stream. Deliberately not std::mt19937 + distributions: the
/// suite promises bit-identical results across platforms, and the standard
/// distributions are implementation-defined.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0,1), 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Uniform integer in [lo, hi] inclusive.
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next_u64() % span);
    }

    /// Standard normal via Box-Muller (one value per call; no state carried
    /// between calls so streams stay reproducible under reordering).
    double normal() {
        double u1 = next_unit();
        while (u1 <= 0.0) u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    Complex complex_box(double scale) { return {uniform(-scale, scale), uniform(-scale, scale)}; }
    Complex complex_normal() { return {normal(), normal()}; }

private:
    uint64_t state_;
};

/// Mixes arbitrary tags into a seed (FNV-1a over the tag bytes, then mixed
/// with the base seed) so per-trial streams depend only on their key.
inline uint64_t derive_seed(uint64_t base, std::string_view tag, uint64_t index) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    for (const char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    mix(base);
    mix(index);
    return h;
}

} // namespace opradius
