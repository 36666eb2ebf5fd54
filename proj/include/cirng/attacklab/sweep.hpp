#pragma once

#include "cirng/attacklab/attacks.hpp"
#include "cirng/stego/stego.hpp"

#include <span>
#include <vector>

namespace cirng {

/// Mean similarities over all keys at one intensity.
struct SweepRow {
    double intensity = 0.0;
    double unauthenticated = 0.0;
    double authenticated = 0.0;
};

struct SweepConfig {
    AttackKind kind = AttackKind::Crop;
    std::vector<double> intensities;
    Interpolation interpolation = Interpolation::Nearest;
    BitPlaneSpec plane = BitPlaneSpec::standard();
};

/// Both similarities of one (intensity, key) cell. The key is used once with
/// authentication off and once with it on; everything else is taken from it.
struct SweepCell {
    double unauthenticated = 0.0;
    double authenticated = 0.0;
};

SweepCell sweep_cell(const GrayImage& cover, const BitImage& watermark, const StegoKey& key,
                     const SweepConfig& config, double intensity, std::uint64_t noise_seed);

/// Noise seed of cell (intensity index, key index); fixed so sweeps are reproducible.
std::uint64_t sweep_noise_seed(std::size_t intensity_index, std::size_t key_index) noexcept;

std::vector<SweepRow> attack_sweep(const GrayImage& cover, const BitImage& watermark,
                                   std::span<const StegoKey> keys, const SweepConfig& config);

} // namespace cirng
