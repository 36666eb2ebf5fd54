#pragma once

#include "cirng/imagery/image.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace cirng {

enum class AttackKind { Crop, Rotate, Jpeg, Gauss };
enum class Interpolation { Nearest, Bilinear };

AttackKind parse_attack_kind(std::string_view s);
std::string_view to_string(AttackKind kind) noexcept;

/// One attack at one intensity. `intensity` is the crop side in pixels, the
/// angle in degrees, the JPEG quality level or the noise sigma.
struct AttackSpec {
    AttackKind kind = AttackKind::Crop;
    double intensity = 0.0;
    std::uint64_t noise_seed = 1;
    Interpolation interpolation = Interpolation::Nearest;
};

/// Zero the rectangle [x, x+w) x [y, y+h).
GrayImage crop_zero(const GrayImage& img, int x, int y, int w, int h);
/// Zero a centered size x size block.
GrayImage crop_zero_centered(const GrayImage& img, int size);

/// Rotate by theta about (w/2, h/2) and back by -theta; pixel i is centered at
/// i + 0.5. Samples falling outside the frame read as 0.
GrayImage rotate_roundtrip(const GrayImage& img, double theta_deg,
                           Interpolation interp = Interpolation::Nearest);

using QuantTable = std::array<std::uint16_t, 64>;

/// Standard luminance table scaled for quality 1..100 (IJG scaling, 100 = all ones).
QuantTable luminance_table(int quality);

/// 8x8 DCT-II round trip with quantization by `table`. Edges are padded by replication.
GrayImage jpeg_with_table(const GrayImage& img, const QuantTable& table);
GrayImage jpeg_like(const GrayImage& img, int level);

/// Adds rounded N(0, sigma^2) noise per pixel, clamped to [0, 255].
GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

GrayImage apply_attack(const GrayImage& img, const AttackSpec& spec);

namespace detail {
/// Transform one 8x8 tile in place (values 0..255 in, clamped bytes out).
void jpeg_block(std::array<double, 64>& block, const QuantTable& table);
/// Copy tile (bx, by) with edge replication, run it, write back the in-frame part.
void jpeg_tile(const GrayImage& in, GrayImage& out, int bx, int by, const QuantTable& table);
} // namespace detail

} // namespace cirng
