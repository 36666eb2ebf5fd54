#include "cirng/bitgen/seeding.hpp"

#include "cirng/bitgen/chaotic.hpp"

#include <chrono>

namespace cirng {

TimeSeed seed_from_t(std::uint64_t t, int n_bits) {
    TimeSeed s;
    s.t = t;
    s.x0 = t & state_mask(n_bits);
    s.y0 = coerce_nonzero(static_cast<std::uint32_t>(t));
    s.y0b = coerce_nonzero(s.y0 ^ kSecondStreamTweak);
    return s;
}

TimeSeed seed_from_time(int n_bits) {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(now).count();
    return seed_from_t(static_cast<std::uint64_t>(micros % 1000000), n_bits);
}

double logistic_seed(std::uint64_t t) noexcept {
    return static_cast<double>(t % 1000000 + 1) / 1000002.0;
}

} // namespace cirng
