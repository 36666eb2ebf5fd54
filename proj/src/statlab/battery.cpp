#include "cirng/statlab/battery.hpp"

#include "cirng/statlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cirng {
namespace {

TestReport chi_report(std::string name, double statistic, int dof, double alpha) {
    const double p = chi2_sf(statistic, dof);
    return {std::move(name), statistic, dof, p, p >= alpha};
}

} // namespace

SerialCounts serial_counts(const BitSeq& s) {
    SerialCounts c;
    c.n1 = count_ones(s);
    c.n0 = s.size() - c.n1;
    std::size_t pairs[4] = {0, 0, 0, 0};
    for (std::size_t i = 1; i < s.size(); ++i) ++pairs[(s[i - 1] << 1) | s[i]];
    c.n00 = pairs[0];
    c.n01 = pairs[1];
    c.n10 = pairs[2];
    c.n11 = pairs[3];
    return c;
}

std::size_t poker_min_length(int m) {
    return static_cast<std::size_t>(m) * 5 * (std::size_t{1} << m);
}

std::vector<std::size_t> poker_counts(const BitSeq& s, int m) {
    if (m < 1 || m > 24) throw std::invalid_argument("poker block size must lie in [1, 24]");
    const std::size_t k = s.size() / static_cast<std::size_t>(m);
    std::vector<std::size_t> counts(std::size_t{1} << m, 0);
    for (std::size_t b = 0; b < k; ++b) {
        std::size_t v = 0;
        for (int j = 0; j < m; ++j) v = (v << 1) | s[b * static_cast<std::size_t>(m) + static_cast<std::size_t>(j)];
        ++counts[v];
    }
    return counts;
}

RunCounts run_counts(const BitSeq& s) {
    const auto n = static_cast<double>(s.size());
    RunCounts rc;
    for (int i = 1;; ++i) {
        const double e = (n - i + 3) / std::ldexp(1.0, i + 2);
        if (e < 5.0) break;
        rc.expected.push_back(e);
        rc.k = i;
    }
    rc.blocks.assign(static_cast<std::size_t>(rc.k), 0);
    rc.gaps.assign(static_cast<std::size_t>(rc.k), 0);
    if (rc.k == 0) return rc;
    auto tally = [&](std::uint8_t bit, std::size_t len) {
        const std::size_t bucket = std::min(len, static_cast<std::size_t>(rc.k)) - 1;
        ++(bit ? rc.blocks : rc.gaps)[bucket];
    };
    std::size_t len = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        ++len;
        if (i + 1 == s.size() || s[i + 1] != s[i]) {
            tally(s[i], len);
            len = 0;
        }
    }
    return rc;
}

std::size_t autocorr_mismatches(const BitSeq& s, std::size_t d) {
    std::size_t a = 0;
    for (std::size_t i = 0; i + d < s.size(); ++i) a += s[i] ^ s[i + d];
    return a;
}

TestReport monobit(const BitSeq& s, double alpha) {
    if (s.empty()) throw std::invalid_argument("monobit needs a nonempty sequence");
    const auto n1 = static_cast<long long>(count_ones(s));
    const auto n0 = static_cast<long long>(s.size()) - n1;
    const long long diff = n0 - n1;
    const double x1 = static_cast<double>(diff * diff) / static_cast<double>(s.size());
    return chi_report("monobit", x1, 1, alpha);
}

TestReport serial2(const BitSeq& s, double alpha) {
    if (s.size() < 21) throw std::invalid_argument("serial test needs n >= 21");
    const SerialCounts c = serial_counts(s);
    const auto n = static_cast<double>(s.size());
    auto sq = [](std::size_t v) { return static_cast<double>(v) * static_cast<double>(v); };
    const double x2 = 4.0 / (n - 1.0) * (sq(c.n00) + sq(c.n01) + sq(c.n10) + sq(c.n11)) -
                      2.0 / n * (sq(c.n0) + sq(c.n1)) + 1.0;
    return chi_report("serial", x2, 2, alpha);
}

TestReport poker(const BitSeq& s, int m, double alpha) {
    if (m < 1 || m > 24) throw std::invalid_argument("poker block size must lie in [1, 24]");
    const std::size_t k = s.size() / static_cast<std::size_t>(m);
    if (k < 5 * (std::size_t{1} << m)) {
        throw std::invalid_argument("poker(m=" + std::to_string(m) + ") needs at least " +
                                    std::to_string(poker_min_length(m)) + " bits, got " + std::to_string(s.size()));
    }
    const auto counts = poker_counts(s, m);
    // Integer numerator 2^m * sum n_i^2 - k^2 keeps m = 1 bit-identical to monobit.
    unsigned __int128 sum_sq = 0;
    for (auto c : counts) sum_sq += static_cast<unsigned __int128>(c) * c;
    const auto numerator = static_cast<__int128>(sum_sq << m) - static_cast<__int128>(k) * static_cast<__int128>(k);
    const double x3 = static_cast<double>(numerator) / static_cast<double>(k);
    return chi_report("poker", x3, (1 << m) - 1, alpha);
}

TestReport runs(const BitSeq& s, double alpha) {
    const RunCounts rc = run_counts(s);
    if (rc.k < 2) {
        throw std::invalid_argument("runs test needs e_2 >= 5 (n >= 79) for a positive dof, got n = " +
                                    std::to_string(s.size()));
    }
    double x4 = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(rc.k); ++i) {
        const double e = rc.expected[i];
        const double db = static_cast<double>(rc.blocks[i]) - e;
        const double dg = static_cast<double>(rc.gaps[i]) - e;
        x4 += (db * db + dg * dg) / e;
    }
    return chi_report("runs", x4, 2 * rc.k - 2, alpha);
}

TestReport autocorr(const BitSeq& s, std::size_t d, double alpha) {
    const std::size_t n = s.size();
    if (d < 1 || d > n / 2) throw std::invalid_argument("autocorrelation shift must lie in [1, n/2]");
    if (n - d < 10) throw std::invalid_argument("autocorrelation needs n - d >= 10");
    const auto a = static_cast<double>(autocorr_mismatches(s, d));
    const auto len = static_cast<double>(n - d);
    const double x5 = std::abs(2.0 * (a - len / 2.0) / std::sqrt(len));
    const double p = std::min(1.0, 2.0 * normal_sf(x5));
    return {"autocorrelation", x5, std::nullopt, p, p >= alpha};
}

TestReport chi_square_gof(std::span<const std::size_t> observed, std::span<const double> probabilities, double alpha,
                          std::string name) {
    if (observed.size() != probabilities.size() || observed.size() < 2) {
        throw std::invalid_argument("goodness of fit needs matching category lists of size >= 2");
    }
    const auto total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::size_t{0}));
    double x = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = total * probabilities[i];
        const double d = static_cast<double>(observed[i]) - e;
        x += d * d / e;
    }
    return chi_report(std::move(name), x, static_cast<int>(observed.size()) - 1, alpha);
}

} // namespace cirng
