#pragma once

#include <cstdint>
#include <span>

namespace jensenlab {

// 64-bit mixing finalizer (splitmix64). All deterministic randomness in the
// library -- noise streams, element samplers, experiment seeds -- goes through
// this one function, so results are bit-identical across platforms.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Running hash of a byte string built from mix64.
inline std::uint64_t hash_bytes(std::span<const unsigned char> bytes) noexcept {
    std::uint64_t h = 0;
    for (unsigned char b : bytes) h = mix64(h ^ b);
    return h;
}

// Top 53 bits of a 64-bit word mapped to [0,1).
inline constexpr double unit_interval(std::uint64_t r) noexcept {
    return static_cast<double>(r >> 11) * 0x1.0p-53;
}

// Minimal deterministic PRNG stream over mix64.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept { return mix64(state_++); }

    // Uniform draw from [0, n) without std::uniform_int_distribution, whose
    // output is implementation-defined.
    std::uint64_t below(std::uint64_t n) noexcept {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    long below_long(long n) noexcept { return static_cast<long>(below(static_cast<std::uint64_t>(n))); }

    bool coin() noexcept { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace jensenlab
