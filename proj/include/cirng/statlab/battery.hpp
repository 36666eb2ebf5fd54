#pragma once

#include "cirng/bitseq.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cirng {

inline constexpr double kDefaultAlpha = 0.05;
/// Threshold for goodness-of-fit over many aggregated p-values.
inline constexpr double kUniformityAlpha = 0.0001;

struct TestReport {
    std::string name;
    double statistic = 0.0;
    std::optional<int> dof; ///< empty for the two-sided normal statistic
    double p_value = 1.0;
    bool passed = true;
};

struct SerialCounts {
    std::size_t n0 = 0, n1 = 0;
    std::size_t n00 = 0, n01 = 0, n10 = 0, n11 = 0;
};

struct RunCounts {
    int k = 0;                      ///< largest run length with e_k >= 5
    std::vector<double> expected;   ///< e_1..e_k at index 0..k-1
    std::vector<std::size_t> blocks; ///< runs of ones; longer than k land in bucket k
    std::vector<std::size_t> gaps;   ///< runs of zeros, same bucketing
};

SerialCounts serial_counts(const BitSeq& s);
/// Histogram of the floor(n/m) non-overlapping m-bit blocks, MSB first.
std::vector<std::size_t> poker_counts(const BitSeq& s, int m);
RunCounts run_counts(const BitSeq& s);
/// A(d): positions where s_i differs from s_{i+d}.
std::size_t autocorr_mismatches(const BitSeq& s, std::size_t d);

/// X1 = (n0 - n1)^2 / n, one degree of freedom.
TestReport monobit(const BitSeq& s, double alpha = kDefaultAlpha);
/// Overlapping 2-bit serial test, two degrees of freedom. Needs n >= 21.
TestReport serial2(const BitSeq& s, double alpha = kDefaultAlpha);
/// m-bit poker test, 2^m - 1 degrees of freedom. Needs floor(n/m) >= 5 * 2^m.
TestReport poker(const BitSeq& s, int m = 8, double alpha = kDefaultAlpha);
/// Runs test over blocks and gaps, 2k - 2 degrees of freedom.
TestReport runs(const BitSeq& s, double alpha = kDefaultAlpha);
/// Non-cyclic autocorrelation at shift d, two-sided normal p-value.
TestReport autocorr(const BitSeq& s, std::size_t d = 8, double alpha = kDefaultAlpha);

/// Pearson goodness of fit of integer counts against category probabilities.
TestReport chi_square_gof(std::span<const std::size_t> observed, std::span<const double> probabilities,
                          double alpha = kDefaultAlpha, std::string name = "chi-square");

/// Smallest length accepted by poker(m).
std::size_t poker_min_length(int m);

} // namespace cirng
