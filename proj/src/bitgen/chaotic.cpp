#include "cirng/bitgen/chaotic.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace cirng {
namespace {

void check_state(std::uint64_t x0, int n_bits) {
    if (n_bits < 2 || n_bits > 64) throw std::invalid_argument("CI state needs 2 <= N <= 64");
    if ((x0 & ~state_mask(n_bits)) != 0) throw std::invalid_argument("x0 does not fit in N bits");
}

} // namespace

NewCi::NewCi(const NewCiSeed& seed, const NewCiConfig& config)
    : n_bits_(config.n_bits),
      x_(seed.x0),
      select_stream_(seed.y0),
      strategy_stream_(seed.y0b),
      selector_(config.selector, config.n_bits),
      decimate_(config.decimate) {
    check_state(seed.x0, config.n_bits);
}

std::uint64_t NewCi::next_state() {
    last_m_ = selector_.select(select_stream_.next());
    const auto n = static_cast<std::uint32_t>(n_bits_);
    x_ = ci_round(
        x_, n_bits_, last_m_, [&] { return static_cast<int>(strategy_stream_.next() % n); }, decimate_);
    return x_;
}

TraceCi::TraceCi(std::uint64_t x0, int n_bits, std::vector<int> m_trace, std::vector<int> b_trace,
                 bool decimate)
    : n_bits_(n_bits), x_(x0), m_trace_(std::move(m_trace)), b_trace_(std::move(b_trace)), decimate_(decimate) {
    check_state(x0, n_bits);
    for (int m : m_trace_) {
        if (m < 0 || m > n_bits) throw std::invalid_argument("trace m outside [0, N]");
    }
    for (int b : b_trace_) {
        if (b < 1 || b > n_bits) throw std::invalid_argument("trace position outside [1, N]");
    }
}

std::uint64_t TraceCi::next_state() {
    if (m_pos_ >= m_trace_.size()) throw std::out_of_range("m trace exhausted");
    const int m = m_trace_[m_pos_++];
    x_ = ci_round(
        x_, n_bits_, m,
        [&] {
            if (b_pos_ >= b_trace_.size()) throw std::out_of_range("strategy trace exhausted");
            return b_trace_[b_pos_++] - 1;
        },
        decimate_);
    return x_;
}

OldCi::OldCi(std::uint64_t x0, double a0, double b0, const OldCiConfig& config)
    : n_bits_(config.n_bits),
      c_(config.c == 0 ? 3 * config.n_bits : config.c),
      x_(x0),
      round_map_(a0, config.mu),
      strategy_map_(b0, config.mu) {
    check_state(x0, config.n_bits);
    if (c_ < 3 * n_bits_) throw std::invalid_argument("old CI requires c >= 3N");
}

std::uint64_t OldCi::next_state() {
    const int d = round_map_.next() > 0.5 ? 1 : 0;
    const int m = d + c_;
    for (int i = 0; i <= m; ++i) {
        const double b = strategy_map_.next();
        const auto s = static_cast<std::uint64_t>(std::floor(100000.0 * b)) % static_cast<std::uint64_t>(n_bits_);
        x_ ^= position_mask(n_bits_, static_cast<int>(s));
    }
    last_flips_ = m + 1;
    return x_;
}

} // namespace cirng
