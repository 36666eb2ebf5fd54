#include "cirng/imagery/image.hpp"

#include "cirng/bitgen/xorshift.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cirng {
namespace {

void check_dims(int w, int h) {
    if (w <= 0 || h <= 0) throw std::invalid_argument("image dimensions must be positive");
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

BitImage::BitImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    check_dims(w, h);
    bits.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill & 1U);
}

BitImage::BitImage(int w, int h, BitSeq data) : width(w), height(h), bits(std::move(data)) {
    check_dims(w, h);
    if (bits.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
        throw std::invalid_argument("bit image data does not match its dimensions");
    }
}

BitPlaneSpec::BitPlaneSpec(std::uint8_t msc_mask, std::uint8_t lsc_mask) : msc_(msc_mask), lsc_(lsc_mask) {
    if (msc_mask & lsc_mask) throw std::invalid_argument("a bit cannot be both MSC and LSC");
    if (lsc_mask == 0) throw std::invalid_argument("LSC set must not be empty");
}

int mask_width(std::uint8_t bit_mask) noexcept { return std::popcount(bit_mask); }

BitSeq extract_plane(const GrayImage& image, std::uint8_t bit_mask) {
    BitSeq out;
    out.reserve(image.size() * static_cast<std::size_t>(mask_width(bit_mask)));
    for (std::uint8_t px : image.pixels) {
        for (int b = 7; b >= 0; --b) {
            if ((bit_mask >> b) & 1U) out.push_back(static_cast<std::uint8_t>((px >> b) & 1U));
        }
    }
    return out;
}

GrayImage replace_plane(const GrayImage& image, std::uint8_t bit_mask, const BitSeq& data) {
    if (data.size() != image.size() * static_cast<std::size_t>(mask_width(bit_mask))) {
        throw std::invalid_argument("plane data length does not match the selected bits");
    }
    GrayImage out = image;
    std::size_t k = 0;
    for (auto& px : out.pixels) {
        for (int b = 7; b >= 0; --b) {
            if (!((bit_mask >> b) & 1U)) continue;
            const auto bit = static_cast<std::uint8_t>(1U << b);
            px = static_cast<std::uint8_t>(data[k++] ? (px | bit) : (px & ~bit));
        }
    }
    return out;
}

GrayImage make_test_carrier(int width, int height, std::uint32_t seed) {
    GrayImage img(width, height);
    XorShift32 noise(seed == 0 ? 1U : seed);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const double u = static_cast<double>(x) / width;
            const double v = static_cast<double>(y) / height;
            double val = 128.0 + 60.0 * std::sin(two_pi * 1.5 * u) * std::cos(two_pi * 1.2 * v) + 30.0 * (u - v);
            val += static_cast<double>(noise.next() % 33) - 16.0;
            img.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(val), 0L, 255L));
        }
    }
    return img;
}

BitImage make_test_watermark(int width, int height) {
    BitImage wm(width, height);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const bool frame = x < 2 || y < 2 || x >= width - 2 || y >= height - 2;
            const bool checker = ((x / 8) + (y / 8)) % 2 == 0;
            const bool diagonal = std::abs(x - y) < 3;
            wm.bits[static_cast<std::size_t>(y * width + x)] = static_cast<std::uint8_t>(frame || (checker != diagonal));
        }
    }
    return wm;
}

} // namespace cirng
