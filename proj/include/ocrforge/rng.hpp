#pragma once

#include <cstdint>

namespace ocrforge {

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

// SplitMix64 finalizer. Shared by Rng and seed derivation so the two stay
// bit-compatible forever (golden-file tested).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic per-task random stream. No global state; copyable so a
// caller can fork an independent cursor into the same sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kGolden64;
        return splitmix64_mix(state_);
    }

    // Uniform in [0,1): high 53 bits over 2^53.
    double next_double() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }

    double next_range(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Uniform integer in [0, n). n = 0 is a caller bug; returns 0.
    std::uint64_t next_below(std::uint64_t n) {
        if (n == 0) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    std::uint8_t next_byte() { return static_cast<std::uint8_t>(next_below(256)); }

    bool next_bool() { return (next() & 1) != 0; }

    std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

} // namespace ocrforge
