#pragma once

#include "cirng/bitseq.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cirng {

/// 8-bit grayscale raster, row major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);

    std::size_t size() const noexcept { return pixels.size(); }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Bilevel raster, row major, one 0/1 value per pixel (1 = black in PBM).
struct BitImage {
    int width = 0;
    int height = 0;
    BitSeq bits;

    BitImage() = default;
    BitImage(int w, int h, std::uint8_t fill = 0);
    BitImage(int w, int h, BitSeq data);

    std::size_t size() const noexcept { return bits.size(); }

    friend bool operator==(const BitImage&, const BitImage&) = default;
};

/// Which bit indices (7 = most significant) of a pixel form the most and least
/// significant coefficients. The two sets must be disjoint.
class BitPlaneSpec {
public:
    BitPlaneSpec(std::uint8_t msc_mask, std::uint8_t lsc_mask);

    /// MSC = bits {7,6,5,4}, LSC = bits {2,1,0}; bit 3 is left alone.
    static BitPlaneSpec standard() { return {0xF0, 0x07}; }

    std::uint8_t msc_mask() const noexcept { return msc_; }
    std::uint8_t lsc_mask() const noexcept { return lsc_; }

private:
    std::uint8_t msc_;
    std::uint8_t lsc_;
};

/// Selected bits of every pixel, pixel-major, high bit first within a pixel.
BitSeq extract_plane(const GrayImage& image, std::uint8_t bit_mask);

/// Inverse of extract_plane: overwrites the selected bits, keeps the others.
GrayImage replace_plane(const GrayImage& image, std::uint8_t bit_mask, const BitSeq& data);

int mask_width(std::uint8_t bit_mask) noexcept;

/// Deterministic textured test carrier: smooth gradients plus seeded noise.
GrayImage make_test_carrier(int width, int height, std::uint32_t seed = 0x5EED);

/// Deterministic bilevel test watermark: a framed checker motif.
BitImage make_test_watermark(int width = 64, int height = 64);

} // namespace cirng
