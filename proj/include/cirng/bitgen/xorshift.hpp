#pragma once

#include <cstdint>

namespace cirng {

/// Marsaglia's 32-bit XORshift with the (13, 17, 5) shift triple.
/// Period 2^32 - 1 over the nonzero words; zero is a fixed point and is rejected.
class XorShift32 {
public:
    explicit XorShift32(std::uint32_t seed);

    std::uint32_t next() noexcept {
        z_ ^= z_ << 13;
        z_ ^= z_ >> 17;
        z_ ^= z_ << 5;
        return z_;
    }

    std::uint32_t state() const noexcept { return z_; }

    std::uint64_t next_state() noexcept { return next(); }
    static constexpr int state_bits() noexcept { return 32; }

private:
    std::uint32_t z_;
};

} // namespace cirng
