#include "cirng/statlab/linear_complexity.hpp"

namespace cirng {

LcProfile lc_profile(const BitSeq& s) {
    const std::size_t n = s.size();
    LcProfile out;
    out.lc.assign(n + 1, 0);
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    int l = 0;
    std::ptrdiff_t m = -1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = s[i];
        for (int j = 1; j <= l; ++j) d ^= c[static_cast<std::size_t>(j)] & s[i - static_cast<std::size_t>(j)];
        if (d) {
            t = c;
            const auto shift = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(i) - m);
            for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
            if (2 * l <= static_cast<int>(i)) {
                l = static_cast<int>(i) + 1 - l;
                m = static_cast<std::ptrdiff_t>(i);
                b = std::move(t);
            }
        }
        out.lc[i + 1] = l;
    }
    return out;
}

int berlekamp_massey(const BitSeq& s) { return lc_profile(s).lc.back(); }

} // namespace cirng
