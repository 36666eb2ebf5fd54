#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cirng {

/// One bit per element, each 0 or 1. Shared by generators, tests and watermarks.
using BitSeq = std::vector<std::uint8_t>;

/// Parses '0'/'1' characters; any other character is skipped.
BitSeq bits_from_string(std::string_view text);
std::string bits_to_string(const BitSeq& bits);

/// Appends the low `width` bits of `value`, most significant first.
void append_bits(BitSeq& out, std::uint64_t value, int width);

BitSeq complement(const BitSeq& bits);
std::size_t count_ones(const BitSeq& bits);

} // namespace cirng
