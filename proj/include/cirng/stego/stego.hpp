#pragma once

#include "cirng/bitseq.hpp"
#include "cirng/imagery/image.hpp"
#include "cirng/stego/key.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cirng {

/// Indices into the LSC bit space, one per watermark bit.
struct StrategyU {
    std::vector<std::uint64_t> u;
};

struct WatermarkResult {
    BitImage watermark;
    double similarity = 0.0; ///< percentage of equal bits, 0..100
};

/// XOR fold of the MSC plane in 64-bit chunks; bit j of the plane lands on bit
/// 63 - (j mod 64) of the digest.
std::uint64_t msc_digest(const BitSeq& msc_bits);

/// Key whose selector seed y0 is perturbed by the digest (y0 ^= hi32 ^ lo32,
/// coerced nonzero). Identity when `digest` is empty.
StegoKey keyed_by_digest(const StegoKey& key, std::optional<std::uint64_t> digest);

/// First `count` New CI output bits of the key's generator.
BitSeq keystream(const StegoKey& key, std::size_t count);

/// w xor keystream; its own inverse.
BitSeq mix_xor(const BitSeq& w, const StegoKey& key);

/// Chaotic iterations on w under vectorial negation: step k negates component
/// S^k mod |w|, S^k being successive New CI states. Replaying the same steps
/// undoes it, so this is also the de-mixing routine.
BitSeq mix_chaotic(const BitSeq& w, const StegoKey& key, std::size_t iterations);
std::size_t default_mix_iterations(std::size_t watermark_bits) noexcept;

/// Dispatch on key.mix with the default iteration count. mix and demix coincide.
BitSeq mix(const BitSeq& w, const StegoKey& key);
BitSeq demix(const BitSeq& mixed, const StegoKey& key);

/// U^0 = S^0, U^{n+1} = S^{n+1} + 2 U^n + n, all mod `modulus`.
StrategyU build_strategy_u(const StegoKey& key, std::size_t count, std::uint64_t modulus,
                           std::optional<std::uint64_t> msc_digest = std::nullopt);
/// The recurrence alone, over given states S.
StrategyU strategy_from_states(std::span<const std::uint64_t> states, std::uint64_t modulus);
bool collision_free(const StrategyU& strategy);

/// SUBSTITUTE writes the mixed bits into L[U^k] (later writes win);
/// SWITCH negates L[U^k] wherever the mixed bit is 1. MSC bits are never touched.
GrayImage embed(const GrayImage& cover, const BitImage& watermark, const StegoKey& key,
                const BitPlaneSpec& plane = BitPlaneSpec::standard());

/// SUBSTITUTE extraction is blind; SWITCH needs the original cover.
BitImage extract(const GrayImage& image, const StegoKey& key, const BitPlaneSpec& plane, int wm_width,
                 int wm_height, const GrayImage* original = nullptr);

WatermarkResult extract_and_score(const GrayImage& image, const StegoKey& key, const BitPlaneSpec& plane,
                                  const BitImage& reference, const GrayImage* original = nullptr);

/// 100 * (equal bits) / (total bits).
double similarity(const BitImage& a, const BitImage& b);

} // namespace cirng
