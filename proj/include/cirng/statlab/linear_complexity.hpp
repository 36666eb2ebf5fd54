#pragma once

#include "cirng/bitseq.hpp"

#include <cstddef>
#include <vector>

namespace cirng {

/// Linear complexity of every prefix: lc[i] is the length of the shortest LFSR
/// over GF(2) generating the first i bits (lc[0] = 0).
struct LcProfile {
    std::vector<int> lc;

    std::size_t size() const noexcept { return lc.empty() ? 0 : lc.size() - 1; }
    static double ideal(std::size_t i) noexcept { return static_cast<double>(i) / 2.0; }
};

LcProfile lc_profile(const BitSeq& s);

/// Berlekamp-Massey over GF(2).
int berlekamp_massey(const BitSeq& s);

} // namespace cirng
