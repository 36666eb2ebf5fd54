#include "cirng/attacklab/attacks.hpp"

#include "cirng/bitgen/seeding.hpp"
#include "cirng/bitgen/xorshift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cirng {
namespace {

constexpr QuantTable kLuminance = {
    16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
    14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
    18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
    49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99,
};

std::uint8_t clamp_byte(double v) {
    return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

// C[u][x] = a(u) cos((2x+1) u pi / 16), orthonormal.
const std::array<double, 64>& dct_matrix() {
    static const std::array<double, 64> m = [] {
        std::array<double, 64> c{};
        for (int u = 0; u < 8; ++u) {
            const double a = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
            for (int x = 0; x < 8; ++x) c[u * 8 + x] = a * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
        }
        return c;
    }();
    return m;
}

double sample(const GrayImage& img, double x, double y, Interpolation interp) {
    if (interp == Interpolation::Nearest) {
        const auto xi = static_cast<long>(std::floor(x));
        const auto yi = static_cast<long>(std::floor(y));
        if (xi < 0 || yi < 0 || xi >= img.width || yi >= img.height) return 0.0;
        return img.at(static_cast<int>(xi), static_cast<int>(yi));
    }
    // bilinear over pixel centers
    const double fx = x - 0.5, fy = y - 0.5;
    const auto x0 = static_cast<long>(std::floor(fx));
    const auto y0 = static_cast<long>(std::floor(fy));
    const double ax = fx - static_cast<double>(x0), ay = fy - static_cast<double>(y0);
    auto px = [&](long xx, long yy) -> double {
        if (xx < 0 || yy < 0 || xx >= img.width || yy >= img.height) return 0.0;
        return img.at(static_cast<int>(xx), static_cast<int>(yy));
    };
    return (1 - ax) * (1 - ay) * px(x0, y0) + ax * (1 - ay) * px(x0 + 1, y0) + (1 - ax) * ay * px(x0, y0 + 1) +
           ax * ay * px(x0 + 1, y0 + 1);
}

GrayImage rotate(const GrayImage& img, double theta_deg, Interpolation interp) {
    const double t = theta_deg * std::numbers::pi / 180.0;
    // exact trig at right angles keeps the lattice permutation exact
    double c = std::cos(t), s = std::sin(t);
    const double q = theta_deg / 90.0;
    if (q == std::round(q)) {
        const long k = ((static_cast<long>(q) % 4) + 4) % 4;
        c = k == 0 ? 1 : k == 2 ? -1 : 0;
        s = k == 1 ? 1 : k == 3 ? -1 : 0;
    }
    const double cx = img.width / 2.0, cy = img.height / 2.0;
    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            // inverse map: destination center back into the source
            const double dx = x + 0.5 - cx, dy = y + 0.5 - cy;
            const double sx = c * dx + s * dy + cx;
            const double sy = -s * dx + c * dy + cy;
            out.at(x, y) = clamp_byte(sample(img, sx, sy, interp));
        }
    }
    return out;
}

} // namespace

AttackKind parse_attack_kind(std::string_view s) {
    if (s == "crop") return AttackKind::Crop;
    if (s == "rotate") return AttackKind::Rotate;
    if (s == "jpeg") return AttackKind::Jpeg;
    if (s == "gauss" || s == "noise") return AttackKind::Gauss;
    throw std::invalid_argument("unknown attack '" + std::string(s) + "'");
}

std::string_view to_string(AttackKind kind) noexcept {
    switch (kind) {
    case AttackKind::Crop: return "crop";
    case AttackKind::Rotate: return "rotate";
    case AttackKind::Jpeg: return "jpeg";
    case AttackKind::Gauss: return "gauss";
    }
    return "?";
}

GrayImage crop_zero(const GrayImage& img, int x, int y, int w, int h) {
    if (x < 0 || y < 0 || w < 0 || h < 0 || x + w > img.width || y + h > img.height) {
        throw std::invalid_argument("crop rectangle out of bounds");
    }
    GrayImage out = img;
    for (int j = y; j < y + h; ++j) std::fill_n(&out.at(x, j), w, std::uint8_t{0});
    return out;
}

GrayImage crop_zero_centered(const GrayImage& img, int size) {
    if (size < 0 || size > img.width || size > img.height) throw std::invalid_argument("crop size exceeds image");
    return crop_zero(img, (img.width - size) / 2, (img.height - size) / 2, size, size);
}

GrayImage rotate_roundtrip(const GrayImage& img, double theta_deg, Interpolation interp) {
    return rotate(rotate(img, theta_deg, interp), -theta_deg, interp);
}

QuantTable luminance_table(int quality) {
    if (quality < 1 || quality > 100) throw std::invalid_argument("JPEG level must be in [1, 100]");
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    QuantTable t{};
    for (std::size_t i = 0; i < 64; ++i) {
        t[i] = static_cast<std::uint16_t>(std::clamp((kLuminance[i] * scale + 50) / 100, 1, 255));
    }
    return t;
}

namespace detail {

void jpeg_block(std::array<double, 64>& block, const QuantTable& table) {
    const auto& c = dct_matrix();
    std::array<double, 64> tmp{}, coef{};
    for (auto& v : block) v -= 128.0;
    // coef = C * B * C^T
    for (int u = 0; u < 8; ++u)
        for (int x = 0; x < 8; ++x) {
            double acc = 0;
            for (int k = 0; k < 8; ++k) acc += c[u * 8 + k] * block[k * 8 + x];
            tmp[u * 8 + x] = acc;
        }
    for (int u = 0; u < 8; ++u)
        for (int v = 0; v < 8; ++v) {
            double acc = 0;
            for (int k = 0; k < 8; ++k) acc += tmp[u * 8 + k] * c[v * 8 + k];
            const double q = table[u * 8 + v];
            coef[u * 8 + v] = std::round(acc / q) * q;
        }
    // B = C^T * coef * C
    for (int x = 0; x < 8; ++x)
        for (int v = 0; v < 8; ++v) {
            double acc = 0;
            for (int k = 0; k < 8; ++k) acc += c[k * 8 + x] * coef[k * 8 + v];
            tmp[x * 8 + v] = acc;
        }
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            double acc = 0;
            for (int k = 0; k < 8; ++k) acc += tmp[x * 8 + k] * c[k * 8 + y];
            block[x * 8 + y] = std::clamp(std::round(acc + 128.0), 0.0, 255.0);
        }
}

void jpeg_tile(const GrayImage& in, GrayImage& out, int bx, int by, const QuantTable& table) {
    std::array<double, 64> block{};
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
            const int x = std::min(bx * 8 + i, in.width - 1);
            const int y = std::min(by * 8 + j, in.height - 1);
            block[j * 8 + i] = in.at(x, y);
        }
    jpeg_block(block, table);
    for (int j = 0; j < 8 && by * 8 + j < in.height; ++j)
        for (int i = 0; i < 8 && bx * 8 + i < in.width; ++i)
            out.at(bx * 8 + i, by * 8 + j) = static_cast<std::uint8_t>(block[j * 8 + i]);
}

} // namespace detail

GrayImage jpeg_with_table(const GrayImage& img, const QuantTable& table) {
    GrayImage out(img.width, img.height);
    const int tiles_x = (img.width + 7) / 8, tiles_y = (img.height + 7) / 8;
    for (int by = 0; by < tiles_y; ++by)
        for (int bx = 0; bx < tiles_x; ++bx) detail::jpeg_tile(img, out, bx, by, table);
    return out;
}

GrayImage jpeg_like(const GrayImage& img, int level) { return jpeg_with_table(img, luminance_table(level)); }

GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma must be >= 0");
    if (sigma == 0.0) return img;
    XorShift32 rng(coerce_nonzero(static_cast<std::uint32_t>(seed ^ (seed >> 32))));
    auto uniform = [&] { return (static_cast<double>(rng.next()) + 0.5) / 4294967296.0; };
    GrayImage out = img;
    std::size_t i = 0;
    while (i < out.size()) {
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double a = 2.0 * std::numbers::pi * uniform();
        for (double z : {r * std::cos(a), r * std::sin(a)}) {
            if (i == out.size()) break;
            out.pixels[i] = clamp_byte(out.pixels[i] + sigma * z);
            ++i;
        }
    }
    return out;
}

GrayImage apply_attack(const GrayImage& img, const AttackSpec& spec) {
    switch (spec.kind) {
    case AttackKind::Crop: return crop_zero_centered(img, static_cast<int>(std::lround(spec.intensity)));
    case AttackKind::Rotate: return rotate_roundtrip(img, spec.intensity, spec.interpolation);
    case AttackKind::Jpeg: return jpeg_like(img, static_cast<int>(std::lround(spec.intensity)));
    case AttackKind::Gauss: return gaussian_noise(img, spec.intensity, spec.noise_seed);
    }
    throw std::invalid_argument("unknown attack");
}

} // namespace cirng
