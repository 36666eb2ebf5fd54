#pragma once

#include "cirng/bitgen/logistic.hpp"
#include "cirng/bitgen/selector.hpp"
#include "cirng/bitgen/xorshift.hpp"
#include "cirng/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cirng {

/// Consecutive discarded strategy draws tolerated in one round before giving up.
inline constexpr std::uint32_t kDiscardCap = 1U << 20;

/// Mask of the component at 0-based position `pos`; position 0 is x_1, the most
/// significant bit of the N-bit state.
constexpr std::uint64_t position_mask(int n_bits, int pos) noexcept {
    return std::uint64_t{1} << (n_bits - 1 - pos);
}

constexpr std::uint64_t state_mask(int n_bits) noexcept {
    return n_bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_bits) - 1;
}

/// One round of chaotic iterations under vectorial negation.
///
/// `draw()` yields 0-based positions. With `decimate`, a draw that hits a
/// position already flipped in this round is discarded, so exactly m distinct
/// components flip. Without it, m draws are applied as they come and a
/// position may flip back.
template <class DrawPosition>
std::uint64_t ci_round(std::uint64_t x, int n_bits, int m, DrawPosition&& draw, bool decimate) {
    if (!decimate) {
        for (int i = 0; i < m; ++i) x ^= position_mask(n_bits, draw());
        return x;
    }
    std::uint64_t marks = 0;
    std::uint32_t discards = 0;
    for (int flipped = 0; flipped < m;) {
        const std::uint64_t bit = position_mask(n_bits, draw());
        if (marks & bit) {
            if (++discards > kDiscardCap) throw InternalFault("strategy draw discarded 2^20 times in a row");
            continue;
        }
        discards = 0;
        marks |= bit;
        x ^= bit;
        ++flipped;
    }
    return x;
}

struct NewCiSeed {
    std::uint64_t x0 = 0;
    std::uint32_t y0 = 1;  ///< seeds the XORshift feeding the selector
    std::uint32_t y0b = 1; ///< seeds the XORshift feeding the strategy
};

struct NewCiConfig {
    int n_bits = 32;
    SelectorKind selector = SelectorKind::G1;
    bool decimate = true; ///< false gives the "no mark" variant
};

/// CI(XORshift, XORshift): each output is the N-bit state after m = g(y)
/// distinct components have been negated, positions drawn from a second XORshift.
class NewCi {
public:
    NewCi(const NewCiSeed& seed, const NewCiConfig& config = {});

    std::uint64_t next_state();
    int state_bits() const noexcept { return n_bits_; }

    std::uint64_t state() const noexcept { return x_; }
    int last_m() const noexcept { return last_m_; }

private:
    int n_bits_;
    std::uint64_t x_;
    XorShift32 select_stream_;
    XorShift32 strategy_stream_;
    Selector selector_;
    bool decimate_;
    int last_m_ = 0;
};

/// New CI driven by a recorded trace instead of the two XORshifts: the round
/// sizes m and 1-based strategy positions are replayed verbatim. Throws
/// std::out_of_range once either trace runs dry.
class TraceCi {
public:
    TraceCi(std::uint64_t x0, int n_bits, std::vector<int> m_trace, std::vector<int> b_trace,
            bool decimate = true);

    std::uint64_t next_state();
    int state_bits() const noexcept { return n_bits_; }

private:
    int n_bits_;
    std::uint64_t x_;
    std::vector<int> m_trace_;
    std::vector<int> b_trace_;
    std::size_t m_pos_ = 0;
    std::size_t b_pos_ = 0;
    bool decimate_;
};

struct OldCiConfig {
    int n_bits = 32;
    int c = 0; ///< 0 selects the default 3N
    double mu = kDefaultMu;
};

/// CI(Logistic, Logistic): m = d + c with d = [a > 0.5], then m + 1 negations at
/// S = floor(100000 b) mod N, repeats allowed.
class OldCi {
public:
    OldCi(std::uint64_t x0, double a0, double b0, const OldCiConfig& config = {});

    std::uint64_t next_state();
    int state_bits() const noexcept { return n_bits_; }

    std::uint64_t state() const noexcept { return x_; }
    int last_flip_count() const noexcept { return last_flips_; }
    int c() const noexcept { return c_; }

private:
    int n_bits_;
    int c_;
    std::uint64_t x_;
    LogisticMap round_map_;
    LogisticMap strategy_map_;
    int last_flips_ = 0;
};

} // namespace cirng
