#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cirng/attacklab/sweep.hpp"
#include "cirng/bitgen/xorshift.hpp"

#include <cmath>

using namespace cirng;

namespace {

GrayImage random_image(int w, int h, std::uint32_t seed) {
    XorShift32 rng(seed);
    GrayImage img(w, h);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.next() >> 24);
    return img;
}

} // namespace

TEST_CASE("crop_zero") {
    const auto img = random_image(20, 12, 3);
    CHECK(crop_zero(img, 5, 5, 0, 0) == img);
    CHECK(crop_zero(img, 0, 0, 20, 12) == GrayImage(20, 12, 0));
    const auto c = crop_zero(img, 2, 3, 4, 5);
    for (int y = 0; y < 12; ++y)
        for (int x = 0; x < 20; ++x) {
            const bool inside = x >= 2 && x < 6 && y >= 3 && y < 8;
            REQUIRE(c.at(x, y) == (inside ? 0 : img.at(x, y)));
        }
    CHECK_THROWS_AS(crop_zero(img, 18, 0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(crop_zero(img, -1, 0, 1, 1), std::invalid_argument);

    const auto centered = crop_zero_centered(GrayImage(10, 10, 9), 4);
    CHECK(centered.at(3, 3) == 0);
    CHECK(centered.at(6, 6) == 0);
    CHECK(centered.at(2, 2) == 9);
    CHECK(centered.at(7, 7) == 9);
    CHECK_THROWS_AS(crop_zero_centered(img, 13), std::invalid_argument);
}

TEST_CASE("rotation round trip") {
    const auto img = random_image(33, 33, 4);
    const auto square = random_image(64, 64, 5);
    CHECK(rotate_roundtrip(img, 0.0) == img);
    CHECK(rotate_roundtrip(square, 90.0) == square);
    CHECK(rotate_roundtrip(square, -180.0) == square);
    CHECK(rotate_roundtrip(square, 0.0, Interpolation::Bilinear) == square);

    const auto r = rotate_roundtrip(square, 2.0);
    CHECK(r.width == 64);
    CHECK(r.height == 64);
    CHECK(r != square);
    CHECK(rotate_roundtrip(square, 2.0) == r);
    // corners rotate out of frame and come back black
    CHECK(rotate_roundtrip(GrayImage(64, 64, 200), 45.0).at(0, 0) == 0);
}

TEST_CASE("luminance table scaling") {
    const auto q100 = luminance_table(100);
    for (auto v : q100) CHECK(v == 1);
    CHECK(luminance_table(50)[0] == 16);
    CHECK(luminance_table(50)[63] == 99);
    CHECK(luminance_table(10)[0] == 80);
    CHECK(luminance_table(1)[0] == 255);
    CHECK_THROWS_AS(luminance_table(0), std::invalid_argument);
    CHECK_THROWS_AS(luminance_table(101), std::invalid_argument);
}

TEST_CASE("jpeg round trip") {
    QuantTable ones;
    ones.fill(1);
    for (std::uint32_t seed = 1; seed <= 5; ++seed) {
        const auto img = random_image(37, 21, seed);
        const auto out = jpeg_with_table(img, ones);
        for (std::size_t i = 0; i < img.size(); ++i) REQUIRE(std::abs(int(out.pixels[i]) - int(img.pixels[i])) <= 1);
    }
    for (int level : {1, 5, 10, 50, 100}) {
        const GrayImage flat(24, 16, 77);
        const auto out = jpeg_like(flat, level);
        const int v = out.pixels[0];
        CHECK(out == GrayImage(24, 16, static_cast<std::uint8_t>(v)));
        // DC = 8 (p - 128) quantized by q0 moves the level by at most q0 / 16
        const int q0 = luminance_table(level)[0];
        CHECK(std::abs(v - 77) <= q0 / 16 + 1);
    }
    const auto img = random_image(64, 64, 8);
    CHECK(jpeg_like(img, 10) == jpeg_like(img, 10));
    CHECK(jpeg_like(img, 10).width == 64);
}

TEST_CASE("gaussian noise") {
    const GrayImage flat(256, 256, 128);
    CHECK(gaussian_noise(flat, 0.0, 1) == flat);
    CHECK(gaussian_noise(flat, 5.0, 42) == gaussian_noise(flat, 5.0, 42));
    CHECK(gaussian_noise(flat, 5.0, 42) != gaussian_noise(flat, 5.0, 43));
    CHECK_THROWS_AS(gaussian_noise(flat, -1.0, 1), std::invalid_argument);

    for (double sigma : {3.0, 5.0, 10.0}) {
        const auto out = gaussian_noise(flat, sigma, 7);
        double sum = 0, sq = 0;
        for (auto p : out.pixels) {
            const double d = double(p) - 128.0;
            sum += d;
            sq += d * d;
        }
        const double n = double(out.size());
        const double sd = std::sqrt(sq / n - (sum / n) * (sum / n));
        CHECK(std::abs(sd - sigma) <= 0.02 * sigma);
        CHECK(std::abs(sum / n) < 0.1);
    }
}

TEST_CASE("attack dispatch") {
    const auto img = random_image(32, 32, 9);
    CHECK(apply_attack(img, {AttackKind::Crop, 4}) == crop_zero_centered(img, 4));
    CHECK(apply_attack(img, {AttackKind::Rotate, 2}) == rotate_roundtrip(img, 2));
    CHECK(apply_attack(img, {AttackKind::Jpeg, 30}) == jpeg_like(img, 30));
    CHECK(apply_attack(img, {AttackKind::Gauss, 2, 5}) == gaussian_noise(img, 2, 5));
    CHECK(parse_attack_kind("rotate") == AttackKind::Rotate);
    CHECK(to_string(parse_attack_kind("gauss")) == "gauss");
    CHECK_THROWS_AS(parse_attack_kind("blur"), std::invalid_argument);
}

TEST_CASE("sweep: authenticated never above unauthenticated") {
    const auto cover = make_test_carrier(128, 128);
    const auto wm = make_test_watermark(32, 32);
    std::vector<StegoKey> keys;
    for (int i = 0; i < 3; ++i) keys.push_back(key_from_seed(70 + i));
    const std::vector<std::pair<AttackKind, std::vector<double>>> sweeps = {
        {AttackKind::Crop, {0, 10, 50, 100}},
        {AttackKind::Rotate, {0, 2, 10}},
        {AttackKind::Jpeg, {100, 50, 10}},
        {AttackKind::Gauss, {0, 1, 5}},
    };
    for (const auto& [kind, levels] : sweeps) {
        SweepConfig cfg;
        cfg.kind = kind;
        cfg.intensities = levels;
        const auto rows = attack_sweep(cover, wm, keys, cfg);
        REQUIRE(rows.size() == levels.size());
        for (const auto& r : rows) CHECK(r.authenticated <= r.unauthenticated + 2.0);
    }
    SweepConfig none;
    none.intensities = {0};
    const auto clean = attack_sweep(cover, wm, keys, none);
    CHECK(clean[0].unauthenticated > 99.0);
    CHECK(clean[0].authenticated > 99.0);
}
