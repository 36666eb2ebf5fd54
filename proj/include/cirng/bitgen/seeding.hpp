#pragma once

#include <cstdint>

namespace cirng {

inline constexpr std::uint32_t kSecondStreamTweak = 0x9E3779B9U;

struct TimeSeed {
    std::uint64_t t = 0;   ///< the raw seed value
    std::uint64_t x0 = 0;  ///< t mod 2^N
    std::uint32_t y0 = 1;  ///< t mod 2^32, never 0
    std::uint32_t y0b = 1; ///< y0 xor 0x9E3779B9, never 0
};

/// Advances `x` and returns the next splitmix64 output; used to spread
/// consecutive integer seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint32_t coerce_nonzero(std::uint32_t v) noexcept { return v == 0 ? 1U : v; }

/// Deterministic seed expansion shared by explicit seeds and clock seeding.
TimeSeed seed_from_t(std::uint64_t t, int n_bits);

/// Reads the microsecond digits of the current epoch time and expands them.
TimeSeed seed_from_time(int n_bits);

/// Maps an integer seed into (0, 1), away from 0, 1/2 and 1:
/// (t mod 10^6 + 1) / (10^6 + 2).
double logistic_seed(std::uint64_t t) noexcept;

} // namespace cirng
