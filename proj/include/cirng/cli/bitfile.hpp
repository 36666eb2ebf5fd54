#pragma once

#include "cirng/bitseq.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace cirng {

enum class BitFormat { Ascii, Binary };

/// ASCII: '0'/'1' with a newline after every 64 bits and after a final partial
/// line. Binary: packed MSB first, the last byte zero-padded.
void write_bits(std::ostream& out, const BitSeq& bits, BitFormat format);
void write_bits(const std::filesystem::path& path, const BitSeq& bits, BitFormat format);

/// ASCII input may contain any whitespace; other characters are a ParseError.
/// Binary input yields 8 bits per byte.
BitSeq read_bits(std::istream& in, BitFormat format);
BitSeq read_bits(const std::filesystem::path& path, BitFormat format);

BitFormat parse_bit_format(const std::string& name);

} // namespace cirng
