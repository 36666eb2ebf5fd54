#pragma once

#include "cirng/imagery/image.hpp"

#include <filesystem>
#include <iosfwd>

namespace cirng {

// Binary Netpbm: P5 graymaps with maxval 255 and P4 bitmaps (rows padded to
// whole bytes, MSB first, 1 = black). Headers are written as
// "P5\n<w> <h>\n255\n"; readers accept any whitespace and '#' comments.

GrayImage read_pgm(std::istream& in);
void write_pgm(std::ostream& out, const GrayImage& image);
BitImage read_pbm(std::istream& in);
void write_pbm(std::ostream& out, const BitImage& image);

GrayImage read_pgm(const std::filesystem::path& path);
void write_pgm(const std::filesystem::path& path, const GrayImage& image);
BitImage read_pbm(const std::filesystem::path& path);
void write_pbm(const std::filesystem::path& path, const BitImage& image);

} // namespace cirng
