#include "cirng/attacklab/sweep.hpp"

#include <stdexcept>

namespace cirng {

SweepCell sweep_cell(const GrayImage& cover, const BitImage& watermark, const StegoKey& key,
                     const SweepConfig& config, double intensity, std::uint64_t noise_seed) {
    const AttackSpec spec{config.kind, intensity, noise_seed, config.interpolation};
    SweepCell cell;
    for (bool auth : {false, true}) {
        StegoKey k = key;
        k.authenticated = auth;
        const GrayImage stego = embed(cover, watermark, k, config.plane);
        const GrayImage attacked = apply_attack(stego, spec);
        const GrayImage* original = k.embed == EmbedMode::Switch ? &cover : nullptr;
        const double s = extract_and_score(attacked, k, config.plane, watermark, original).similarity;
        (auth ? cell.authenticated : cell.unauthenticated) = s;
    }
    return cell;
}

std::uint64_t sweep_noise_seed(std::size_t intensity_index, std::size_t key_index) noexcept {
    return 0x6E015E00ULL + (static_cast<std::uint64_t>(intensity_index) << 32) + key_index;
}

std::vector<SweepRow> attack_sweep(const GrayImage& cover, const BitImage& watermark,
                                   std::span<const StegoKey> keys, const SweepConfig& config) {
    if (keys.empty()) throw std::invalid_argument("attack sweep needs at least one key");
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < config.intensities.size(); ++i) {
        SweepRow row{config.intensities[i], 0.0, 0.0};
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const auto cell =
                sweep_cell(cover, watermark, keys[k], config, config.intensities[i], sweep_noise_seed(i, k));
            row.unauthenticated += cell.unauthenticated;
            row.authenticated += cell.authenticated;
        }
        row.unauthenticated /= static_cast<double>(keys.size());
        row.authenticated /= static_cast<double>(keys.size());
        rows.push_back(row);
    }
    return rows;
}

} // namespace cirng
