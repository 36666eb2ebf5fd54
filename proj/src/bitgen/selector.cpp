#include "cirng/bitgen/selector.hpp"

#include <algorithm>
#include <stdexcept>

namespace cirng {

Selector::Selector(SelectorKind kind, int n_bits) : kind_(kind), n_bits_(n_bits) {
    if (n_bits < 2 || n_bits > 64) throw std::invalid_argument("selector needs 2 <= N <= 64");
    // Pascal row N, C(64, 32) < 2^61 so every entry fits.
    std::array<std::uint64_t, 65> row{};
    row[0] = 1;
    for (int r = 1; r <= n_bits; ++r) {
        for (int i = r; i > 0; --i) row[i] += row[i - 1];
    }
    uint128 sum = 0;
    for (int k = 0; k <= n_bits; ++k) {
        sum += row[static_cast<std::size_t>(k)];
        cumulative_[static_cast<std::size_t>(k)] = sum;
        scaled_[static_cast<std::size_t>(k)] = sum << 32;
    }
}

int Selector::select(std::uint32_t y) const noexcept {
    if (kind_ == SelectorKind::Mod) return static_cast<int>(y % static_cast<std::uint32_t>(n_bits_));
    const uint128 lhs = static_cast<uint128>(y) << n_bits_;
    const auto first = scaled_.begin();
    const auto last = first + n_bits_ + 1;
    // T_N * 2^32 = 2^(N+32) > y * 2^N, so the search always lands in [0, N].
    const int k = static_cast<int>(std::upper_bound(first, last, lhs) - first);
    return kind_ == SelectorKind::G1 ? k : n_bits_ - k;
}

} // namespace cirng
