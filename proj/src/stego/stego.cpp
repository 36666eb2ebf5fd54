#include "cirng/stego/stego.hpp"

#include "cirng/bitgen/chaotic.hpp"
#include "cirng/bitgen/generator.hpp"
#include "cirng/bitgen/seeding.hpp"

#include <stdexcept>
#include <unordered_set>

namespace cirng {
namespace {

NewCi generator_for(const StegoKey& key) {
    return NewCi({key.x0, key.y0, key.y0b}, {key.n_bits, SelectorKind::G1, true});
}

std::optional<std::uint64_t> digest_if_authenticated(const GrayImage& image, const StegoKey& key,
                                                     const BitPlaneSpec& plane) {
    if (!key.authenticated) return std::nullopt;
    return msc_digest(extract_plane(image, plane.msc_mask()));
}

// Positions and mixed payload shared by embedding and extraction.
struct Layout {
    StrategyU strategy;
    StegoKey mixing_key;
};

Layout layout_for(const GrayImage& image, const StegoKey& key, const BitPlaneSpec& plane, std::size_t wm_bits) {
    const std::size_t capacity = image.size() * static_cast<std::size_t>(mask_width(plane.lsc_mask()));
    if (wm_bits > capacity) {
        throw std::invalid_argument("watermark of " + std::to_string(wm_bits) + " bits exceeds LSC capacity " +
                                    std::to_string(capacity));
    }
    const auto digest = digest_if_authenticated(image, key, plane);
    return {build_strategy_u(key, wm_bits, capacity, digest), keyed_by_digest(key, digest)};
}

} // namespace

std::uint64_t msc_digest(const BitSeq& msc_bits) {
    std::uint64_t digest = 0;
    for (std::size_t j = 0; j < msc_bits.size(); ++j) {
        if (msc_bits[j]) digest ^= std::uint64_t{1} << (63 - j % 64);
    }
    return digest;
}

StegoKey keyed_by_digest(const StegoKey& key, std::optional<std::uint64_t> digest) {
    if (!digest) return key;
    StegoKey out = key;
    const auto folded = static_cast<std::uint32_t>(*digest ^ (*digest >> 32));
    out.y0 = coerce_nonzero(key.y0 ^ folded);
    return out;
}

BitSeq keystream(const StegoKey& key, std::size_t count) {
    NewCi gen = generator_for(key);
    return take_bits(gen, count);
}

BitSeq mix_xor(const BitSeq& w, const StegoKey& key) {
    const BitSeq ks = keystream(key, w.size());
    BitSeq out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] ^ ks[i];
    return out;
}

BitSeq mix_chaotic(const BitSeq& w, const StegoKey& key, std::size_t iterations) {
    if (w.empty()) throw std::invalid_argument("chaotic mixing needs a nonempty watermark");
    BitSeq out = w;
    NewCi gen = generator_for(key);
    const std::uint64_t len = w.size();
    for (std::size_t k = 0; k < iterations; ++k) out[gen.next_state() % len] ^= 1U;
    return out;
}

std::size_t default_mix_iterations(std::size_t watermark_bits) noexcept { return 2 * watermark_bits; }

BitSeq mix(const BitSeq& w, const StegoKey& key) {
    if (key.mix == MixMode::Xor) return mix_xor(w, key);
    return mix_chaotic(w, key, default_mix_iterations(w.size()));
}

BitSeq demix(const BitSeq& mixed, const StegoKey& key) { return mix(mixed, key); }

StrategyU strategy_from_states(std::span<const std::uint64_t> states, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("strategy modulus must be >= 1");
    StrategyU out;
    out.u.reserve(states.size());
    std::uint64_t prev = 0;
    for (std::size_t n = 0; n < states.size(); ++n) {
        const std::uint64_t s = states[n] % modulus;
        if (n == 0) {
            prev = s;
        } else {
            // U^n = S^n + 2 U^{n-1} + (n - 1)
            const auto sum = static_cast<unsigned __int128>(s) + 2 * static_cast<unsigned __int128>(prev) + (n - 1);
            prev = static_cast<std::uint64_t>(sum % modulus);
        }
        out.u.push_back(prev);
    }
    return out;
}

StrategyU build_strategy_u(const StegoKey& key, std::size_t count, std::uint64_t modulus,
                           std::optional<std::uint64_t> msc_digest) {
    if (modulus == 0) throw std::invalid_argument("strategy modulus must be >= 1");
    NewCi gen = generator_for(keyed_by_digest(key, msc_digest));
    std::vector<std::uint64_t> states(count);
    for (auto& s : states) s = gen.next_state();
    return strategy_from_states(states, modulus);
}

bool collision_free(const StrategyU& strategy) {
    std::unordered_set<std::uint64_t> seen(strategy.u.begin(), strategy.u.end());
    return seen.size() == strategy.u.size();
}

GrayImage embed(const GrayImage& cover, const BitImage& watermark, const StegoKey& key, const BitPlaneSpec& plane) {
    const Layout layout = layout_for(cover, key, plane, watermark.size());
    const BitSeq mixed = mix(watermark.bits, layout.mixing_key);
    BitSeq lsc = extract_plane(cover, plane.lsc_mask());
    for (std::size_t k = 0; k < mixed.size(); ++k) {
        auto& slot = lsc[layout.strategy.u[k]];
        if (key.embed == EmbedMode::Substitute) {
            slot = mixed[k];
        } else {
            slot ^= mixed[k];
        }
    }
    return replace_plane(cover, plane.lsc_mask(), lsc);
}

BitImage extract(const GrayImage& image, const StegoKey& key, const BitPlaneSpec& plane, int wm_width,
                 int wm_height, const GrayImage* original) {
    if (key.embed == EmbedMode::Switch) {
        if (original == nullptr) throw std::invalid_argument("switch-mode extraction requires the original cover");
        if (original->width != image.width || original->height != image.height) {
            throw std::invalid_argument("original cover dimensions differ from the image");
        }
    }
    BitImage out(wm_width, wm_height);
    const Layout layout = layout_for(image, key, plane, out.size());
    BitSeq lsc = extract_plane(image, plane.lsc_mask());
    if (key.embed == EmbedMode::Switch) {
        const BitSeq base = extract_plane(*original, plane.lsc_mask());
        for (std::size_t i = 0; i < lsc.size(); ++i) lsc[i] ^= base[i];
    }
    BitSeq mixed(out.size());
    for (std::size_t k = 0; k < mixed.size(); ++k) mixed[k] = lsc[layout.strategy.u[k]];
    out.bits = demix(mixed, layout.mixing_key);
    return out;
}

WatermarkResult extract_and_score(const GrayImage& image, const StegoKey& key, const BitPlaneSpec& plane,
                                  const BitImage& reference, const GrayImage* original) {
    WatermarkResult r{extract(image, key, plane, reference.width, reference.height, original), 0.0};
    r.similarity = similarity(r.watermark, reference);
    return r;
}

double similarity(const BitImage& a, const BitImage& b) {
    if (a.width != b.width || a.height != b.height) throw std::invalid_argument("watermark dimensions differ");
    if (a.size() == 0) return 100.0;
    std::size_t equal = 0;
    for (std::size_t i = 0; i < a.size(); ++i) equal += a.bits[i] == b.bits[i];
    return 100.0 * static_cast<double>(equal) / static_cast<double>(a.size());
}

} // namespace cirng
