#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace cirng {

enum class MixMode { Xor, Chaotic };
enum class EmbedMode { Switch, Substitute };

/// Everything that determines mixing, the embedding strategy and its positions.
struct StegoKey {
    std::uint64_t x0 = 0;
    std::uint32_t y0 = 1;
    std::uint32_t y0b = 1;
    int n_bits = 64;
    MixMode mix = MixMode::Chaotic;
    EmbedMode embed = EmbedMode::Substitute;
    bool authenticated = false;

    friend bool operator==(const StegoKey&, const StegoKey&) = default;
};

/// Key derived from one integer through splitmix64; used by tests and sweeps.
StegoKey key_from_seed(std::uint64_t seed, MixMode mix = MixMode::Chaotic,
                       EmbedMode embed = EmbedMode::Substitute, bool authenticated = false);

/// Text form: `x0=<hex> y0=<u32> y0b=<u32> n=<int> mix=<xor|ci> mode=<switch|subst> auth=<0|1>`.
std::string format_key(const StegoKey& key);
/// Fields may come in any order separated by whitespace; all seven are required.
/// Zero XORshift seeds are coerced to 1.
StegoKey parse_key(std::string_view text);

StegoKey read_key_file(const std::filesystem::path& path);
void write_key_file(const std::filesystem::path& path, const StegoKey& key);

} // namespace cirng
