#include "cirng/bitseq.hpp"

#include <algorithm>

namespace cirng {

BitSeq bits_from_string(std::string_view text) {
    BitSeq out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

std::string bits_to_string(const BitSeq& bits) {
    std::string out(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) out[i] = '1';
    }
    return out;
}

void append_bits(BitSeq& out, std::uint64_t value, int width) {
    for (int i = width - 1; i >= 0; --i) {
        out.push_back(static_cast<std::uint8_t>((value >> i) & 1U));
    }
}

BitSeq complement(const BitSeq& bits) {
    BitSeq out(bits.size());
    std::transform(bits.begin(), bits.end(), out.begin(),
                   [](std::uint8_t b) { return static_cast<std::uint8_t>(b ^ 1U); });
    return out;
}

std::size_t count_ones(const BitSeq& bits) {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

} // namespace cirng
