#pragma once

#include <cstdint>

namespace gnorm {

// Counter-free splitmix64 stream. Substreams derived from (master, index)
// are independent enough for Monte Carlo use and make every trial a pure
// function of its index, so parallel runs reproduce serial ones.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), bound >= 1. Lemire's multiply-shift with the
    // usual rejection step to remove bias.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t cutoff = (0 - bound) % bound;
            while (lo < cutoff) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::uint64_t state_;
};

inline Rng substream(std::uint64_t master, std::uint64_t index) {
    return Rng(mix64(master + 0x9E3779B97F4A7C15ULL * (index + 1)));
}

}  // namespace gnorm
