#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cirng/bitgen/generator.hpp"
#include "cirng/statlab/battery.hpp"
#include "cirng/statlab/experiments.hpp"
#include "cirng/statlab/linear_complexity.hpp"
#include "cirng/statlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace cirng;

namespace {

BitSeq alternating(std::size_t n) {
    BitSeq s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<std::uint8_t>(i & 1U);
    return s;
}

BitSeq random_bits(XorShift32& src, std::size_t n) {
    BitSeq s(n);
    for (auto& b : s) b = static_cast<std::uint8_t>(src.next() >> 31);
    return s;
}

// Closed forms of the chi-square tail: finite Poisson sum for even dof,
// erfc plus a finite half-integer sum for odd dof. Terms built in log space.
double chi2_sf_closed_form(double x, int dof) {
    const double y = x / 2.0;
    double sum = 0.0;
    if (dof % 2 == 0) {
        for (int j = 0; j < dof / 2; ++j) sum += std::exp(j * std::log(y) - std::lgamma(j + 1.0) - y);
        return sum;
    }
    for (int j = 0; j < (dof - 1) / 2; ++j) sum += std::exp((j + 0.5) * std::log(y) - std::lgamma(j + 1.5) - y);
    return std::erfc(std::sqrt(y)) + sum;
}

// Exhaustive search: the smallest L for which some connection polynomial of
// degree L reproduces the whole sequence.
int lfsr_brute_force(const BitSeq& s) {
    const int n = static_cast<int>(s.size());
    for (int l = 0; l <= n; ++l) {
        for (unsigned taps = 0; taps < (1U << l); ++taps) {
            bool ok = true;
            for (int j = l; j < n && ok; ++j) {
                unsigned v = 0;
                for (int i = 1; i <= l; ++i) v ^= ((taps >> (i - 1)) & 1U) & s[static_cast<std::size_t>(j - i)];
                ok = v == s[static_cast<std::size_t>(j)];
            }
            if (ok) return l;
        }
    }
    return n;
}

} // namespace

TEST_CASE("chi2_sf against closed forms") {
    CHECK(chi2_sf(0.0, 5) == 1.0);
    CHECK(chi2_sf(3.841, 1) == doctest::Approx(0.05).epsilon(0.002));
    CHECK(chi2_sf(1e6, 3) < 1e-300);
    for (int dof : {1, 2, 3, 4, 7, 10, 31, 64, 255, 256, 511, 1000, 1023, 1024}) {
        for (double f : {0.05, 0.3, 0.7, 0.95, 1.0, 1.05, 1.3, 2.0, 4.0}) {
            const double x = f * dof + (dof < 5 ? f : 0.0);
            INFO("dof=" << dof << " x=" << x);
            CHECK(std::abs(chi2_sf(x, dof) - chi2_sf_closed_form(x, dof)) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(chi2_sf(1.0, 0), std::invalid_argument);
}

TEST_CASE("chi2_sf is monotone in x") {
    for (int dof : {1, 2, 9, 255}) {
        double prev = 1.0;
        for (double x = 0.0; x < 3.0 * dof + 20; x += 0.25) {
            const double p = chi2_sf(x, dof);
            REQUIRE(p <= prev);
            REQUIRE(p >= 0.0);
            prev = p;
        }
    }
}

TEST_CASE("monobit") {
    const auto zeros = monobit(BitSeq(100, 0));
    CHECK(zeros.statistic == 100.0);
    CHECK(zeros.dof == 1);
    CHECK_FALSE(zeros.passed);
    CHECK(monobit(alternating(100)).statistic == 0.0);
    CHECK(monobit(alternating(100)).p_value == 1.0);
    CHECK_THROWS_AS(monobit(BitSeq{}), std::invalid_argument);
}

TEST_CASE("serial") {
    const auto alt = alternating(100);
    const auto c = serial_counts(alt);
    CHECK(c.n01 == 50);
    CHECK(c.n10 == 49);
    CHECK(c.n00 + c.n11 == 0);
    // 4/99 * (50^2 + 49^2) - 2/100 * (50^2 + 50^2) + 1
    CHECK(serial2(alt).statistic == doctest::Approx(99.0202020202).epsilon(1e-10));
    CHECK(serial2(BitSeq(100, 0)).statistic == doctest::Approx(197.0).epsilon(1e-12));
    CHECK(serial2(alt).dof == 2);
    CHECK_THROWS_AS(serial2(BitSeq(20, 1)), std::invalid_argument);

    XorShift32 src(99);
    for (int i = 0; i < 200; ++i) {
        const auto s = random_bits(src, 21 + src.next() % 500);
        const auto sc = serial_counts(s);
        REQUIRE(sc.n00 + sc.n01 + sc.n10 + sc.n11 == s.size() - 1);
    }
}

TEST_CASE("poker") {
    BitSeq nibbles;
    for (int rep = 0; rep < 40; ++rep) {
        for (std::uint64_t v = 0; v < 16; ++v) append_bits(nibbles, v, 4);
    }
    REQUIRE(nibbles.size() == 2560);
    CHECK(poker(nibbles, 4).statistic == 0.0);
    CHECK(poker(nibbles, 4).dof == 15);

    CHECK(poker(BitSeq(10240, 0), 8).statistic == 326400.0);

    try {
        poker(BitSeq(100, 0), 8);
        FAIL("expected a bound violation");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("10240") != std::string::npos);
    }
    CHECK(poker_min_length(8) == 10240);
}

TEST_CASE("poker with m = 1 is the frequency test") {
    XorShift32 src(4242);
    for (int i = 0; i < 10'000; ++i) {
        auto s = random_bits(src, 10 + src.next() % 300);
        if (i % 7 == 0) std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), 1);
        REQUIRE(poker(s, 1).statistic == monobit(s).statistic);
    }
}

TEST_CASE("runs") {
    const auto rc = run_counts(alternating(100));
    CHECK(rc.k == 2);
    CHECK(rc.expected[0] == 12.75);
    CHECK(rc.expected[1] == 6.3125);
    CHECK(rc.blocks[0] == 50);
    CHECK(rc.gaps[0] == 50);
    CHECK(rc.blocks[1] == 0);

    // A long run lands in bucket k.
    BitSeq s = alternating(100);
    std::fill(s.begin(), s.begin() + 10, 1);
    const auto long_run = run_counts(s);
    CHECK(long_run.blocks[1] == 1);

    const auto rep = runs(alternating(100));
    CHECK(rep.dof == 2);
    CHECK(rep.statistic >= 0.0);
    // (50-12.75)^2/12.75 * 2 + (0-6.3125)^2/6.3125 * 2
    CHECK(rep.statistic == doctest::Approx(2 * 37.25 * 37.25 / 12.75 + 2 * 6.3125).epsilon(1e-12));
    CHECK_THROWS_AS(runs(BitSeq(78, 0)), std::invalid_argument);
    CHECK_NOTHROW(runs(alternating(79)));
}

TEST_CASE("autocorrelation") {
    const auto alt = alternating(100);
    CHECK(autocorr_mismatches(alt, 1) == 99);
    CHECK(autocorr(alt, 1).statistic == doctest::Approx(std::sqrt(99.0)).epsilon(1e-12));
    CHECK_FALSE(autocorr(alt, 1).dof.has_value());
    // d-periodic: the shift lines up every bit.
    CHECK(autocorr_mismatches(alt, 2) == 0);
    CHECK(autocorr(alt, 2).statistic == doctest::Approx(std::sqrt(98.0)).epsilon(1e-12));
    CHECK_THROWS_AS(autocorr(alt, 0), std::invalid_argument);
    CHECK_THROWS_AS(autocorr(alt, 51), std::invalid_argument);
    CHECK_THROWS_AS(autocorr(BitSeq(18, 0), 9), std::invalid_argument);

    XorShift32 src(7);
    const auto s = random_bits(src, 200000);
    CHECK(autocorr(s, 8).statistic < 4.0);
}

TEST_CASE("tests are pure") {
    XorShift32 src(31337);
    const auto s = random_bits(src, 20000);
    CHECK(monobit(s).statistic == monobit(s).statistic);
    CHECK(runs(s).statistic == runs(s).statistic);
    CHECK(poker(s, 4).p_value == poker(s, 4).p_value);
}

TEST_CASE("goodness of fit") {
    const std::size_t obs[] = {25, 25, 25, 25};
    const double p[] = {0.25, 0.25, 0.25, 0.25};
    const auto r = chi_square_gof(obs, p);
    CHECK(r.statistic == 0.0);
    CHECK(r.dof == 3);
    CHECK(r.passed);
}

TEST_CASE("berlekamp-massey examples") {
    CHECK(berlekamp_massey(BitSeq(50, 0)) == 0);
    CHECK(berlekamp_massey(BitSeq(50, 1)) == 1);
    CHECK(berlekamp_massey(bits_from_string("001")) == 3);
    CHECK(lfsr_brute_force(bits_from_string("001")) == 3);
    CHECK(berlekamp_massey(alternating(40)) == 2);
}

TEST_CASE("berlekamp-massey agrees with exhaustive search") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for (unsigned v = 0; v < (1U << n); ++v) {
            BitSeq s;
            append_bits(s, v, static_cast<int>(n));
            REQUIRE(berlekamp_massey(s) == lfsr_brute_force(s));
        }
    }
}

TEST_CASE("lc profile is consistent with prefixes") {
    XorShift32 src(5);
    const auto s = random_bits(src, 300);
    const auto prof = lc_profile(s);
    REQUIRE(prof.size() == 300);
    for (std::size_t i = 1; i <= 300; ++i) {
        REQUIRE(prof.lc[i] >= prof.lc[i - 1]);
        REQUIRE(prof.lc[i] <= static_cast<int>(i));
    }
    for (std::size_t i : {1U, 17U, 64U, 299U}) {
        CHECK(berlekamp_massey(BitSeq(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(i))) == prof.lc[i]);
    }
    CHECK(LcProfile::ideal(300) == 150.0);
}

TEST_CASE("hamming and imbalance") {
    const auto a = bits_from_string("0100");
    const auto b = bits_from_string("1011");
    CHECK(hamming(a, a) == 0);
    CHECK(hamming(a, b) == 4);
    CHECK(hamming(BitSeq(8, 0), complement(BitSeq(8, 0))) == 8);
    CHECK_THROWS_AS(hamming(a, BitSeq(3, 0)), std::invalid_argument);
    CHECK(imbalance_percent(alternating(10)) == 0.0);
    CHECK(imbalance_percent(BitSeq(10, 1)) == 100.0);
}

TEST_CASE("key sensitivity") {
    KeyParams params{{0x1234, 0xCAFEBABE, 0x12345678}, {32}};
    NewCi a(params.seed, params.config);
    NewCi b(params.seed, params.config);
    CHECK(hamming(take_bits(a, 5000), take_bits(b, 5000)) == 0);

    // Negation iterations are xor-linear in x0: flipping one x0 bit flips the
    // same component of every output state and nothing else.
    CHECK(key_sensitivity(params, 3, 32000) == doctest::Approx(1.0 / 32));

    for (int bit : {32, 40, 63, 64, 95}) {
        const double p = key_sensitivity(params, bit, 20000);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(std::abs(p - 0.5) < 0.03);
    }

    KeyParams z{{0, 1, 1}, {8}};
    CHECK(flip_key_bit(z, 8).seed.y0 == 1U); // 1 ^ 1 = 0, coerced back
    CHECK_THROWS_AS(flip_key_bit(z, 72), std::invalid_argument);
}

TEST_CASE("balance experiment favours decimation") {
    GeneratorFactory make = [](std::size_t run, bool decimated) -> AnyGenerator {
        const TimeSeed s = seed_from_t(1000 + run * 7919, 16);
        return NewCi({s.x0, s.y0, s.y0b}, {16, SelectorKind::G1, decimated});
    };
    const auto with = balance_experiment(make, 40, 20000, true);
    const auto without = balance_experiment(make, 40, 20000, false);
    REQUIRE(with.size() == 40);
    const double mean_with = std::accumulate(with.begin(), with.end(), 0.0) / 40;
    const double mean_without = std::accumulate(without.begin(), without.end(), 0.0) / 40;
    CHECK(mean_with < mean_without);
    CHECK_THROWS_AS(balance_experiment(make, 0, 10, true), std::invalid_argument);
}

TEST_CASE("pair intensity") {
    const std::vector<std::uint64_t> constant(50, 5);
    const auto pi = pair_intensity(constant, 4);
    CHECK(std::count_if(pi.histogram.begin(), pi.histogram.end(), [](auto c) { return c != 0; }) == 1);
    CHECK(pi.total_pairs() == 49);
    REQUIRE(pi.pairs.size() == 1);
    CHECK(pi.pairs[0].x == 5);

    const std::vector<std::uint64_t> seq = {1, 2, 1, 2, 3};
    const auto p2 = pair_intensity(seq, 2);
    CHECK(p2.total_pairs() == 4);
    CHECK(p2.pairs.front().x == 1);
    CHECK(p2.pairs.front().y == 2);
    CHECK(p2.pairs.front().count == 2);

    CHECK_THROWS_AS(pair_intensity(seq, 17), std::invalid_argument);
    CHECK_THROWS_AS(pair_intensity(seq, 1), std::invalid_argument);
}
