#pragma once

#include <cmath>
#include <cstdint>

namespace varedit {

// Counter-based generator: every draw is a pure integer hash of
// (seed, counter), so sequences are identical on every platform and
// streams can be split without touching each other's state.
class RngState {
public:
    explicit RngState(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    std::uint64_t next_u64() { return mix(seed_, counter_++); }

    // Uniform in [0, 1), 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in (0, 1]; safe to feed into log().
    double next_double_open() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard Gumbel(0, 1) draw.
    double next_gumbel() { return -std::log(-std::log(next_double_open())); }

    // Derive an independent stream. Draw order in one stream never
    // affects another, so per-scale / per-image work stays reproducible.
    RngState split(std::uint64_t stream) const {
        return RngState(mix(seed_ ^ 0x6a09e667f3bcc909ull, stream));
    }

private:
    static std::uint64_t mix(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (counter + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace varedit
