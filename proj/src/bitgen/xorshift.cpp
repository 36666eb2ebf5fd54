#include "cirng/bitgen/xorshift.hpp"

#include <stdexcept>

namespace cirng {

XorShift32::XorShift32(std::uint32_t seed) : z_(seed) {
    if (seed == 0) throw std::invalid_argument("xorshift seed must be nonzero");
}

} // namespace cirng
