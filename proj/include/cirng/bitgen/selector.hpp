#pragma once

#include <array>
#include <cstdint>

namespace cirng {

using uint128 = unsigned __int128;

enum class SelectorKind {
    G1,  ///< binomially weighted ladder, m grows with y
    G2,  ///< the same ladder reversed: N - g1(y)
    Mod, ///< y mod N; deliberately non-uniform outputs, kept for comparison
};

/// Maps a 32-bit word y to the number of bits m in [0, N] to flip in one round.
///
/// The G1 ladder has thresholds T_k = sum_{i<=k} C(N, i) / 2^N and returns the
/// unique k with T_{k-1} <= y / 2^32 < T_k. Comparisons are carried out as
/// y * 2^N < (sum C(N, i)) * 2^32 in 128-bit integers, so the ladder is exact
/// for every N up to 64.
class Selector {
public:
    Selector(SelectorKind kind, int n_bits);

    int select(std::uint32_t y) const noexcept;

    SelectorKind kind() const noexcept { return kind_; }
    int n_bits() const noexcept { return n_bits_; }

    /// sum_{i=0..k} C(N, i), the numerator of T_k over 2^N.
    uint128 cumulative(int k) const noexcept { return cumulative_[static_cast<std::size_t>(k)]; }

private:
    SelectorKind kind_;
    int n_bits_;
    std::array<uint128, 65> cumulative_{};
    std::array<uint128, 65> scaled_{}; // cumulative_ << 32
};

} // namespace cirng
