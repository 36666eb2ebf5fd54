#pragma once

#include <cstdint>

namespace cirng {

inline constexpr double kDefaultMu = 3.9999;

/// x <- mu * x * (1 - x), kept in the chaotic regime 3.57 < mu <= 4.
class LogisticMap {
public:
    explicit LogisticMap(double x, double mu = kDefaultMu);

    /// Advances one step. Throws DegenerateOrbit if the current value has
    /// collapsed onto 0 or 1 (only reachable through rounding).
    double next();

    double value() const noexcept { return x_; }
    double mu() const noexcept { return mu_; }

private:
    double x_;
    double mu_;
};

/// Bit generator driven by a single logistic map: one bit per iterate, 1 when x > 0.5.
class LogisticBits {
public:
    explicit LogisticBits(double x, double mu = kDefaultMu) : map_(x, mu) {}

    std::uint64_t next_state() { return map_.next() > 0.5 ? 1U : 0U; }
    static constexpr int state_bits() noexcept { return 1; }

private:
    LogisticMap map_;
};

} // namespace cirng
