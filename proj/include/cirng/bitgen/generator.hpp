#pragma once

#include "cirng/bitgen/chaotic.hpp"
#include "cirng/bitgen/logistic.hpp"
#include "cirng/bitgen/xorshift.hpp"
#include "cirng/bitseq.hpp"

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cirng {

/// Anything that emits fixed-width states; bits are read MSB first.
template <class G>
concept StateGenerator = requires(G g) {
    { g.next_state() } -> std::convertible_to<std::uint64_t>;
    { g.state_bits() } -> std::convertible_to<int>;
};

/// Concatenates successive states, x_1 first, truncating the last state.
template <StateGenerator G>
BitSeq take_bits(G& gen, std::size_t count) {
    BitSeq out;
    out.reserve(count);
    const int width = gen.state_bits();
    while (out.size() < count) {
        const std::uint64_t s = gen.next_state();
        for (int i = width - 1; i >= 0 && out.size() < count; --i) {
            out.push_back(static_cast<std::uint8_t>((s >> i) & 1U));
        }
    }
    return out;
}

using AnyGenerator = std::variant<XorShift32, LogisticBits, OldCi, NewCi, TraceCi>;

BitSeq take_bits(AnyGenerator& gen, std::size_t count);

enum class GeneratorKind { XorShift, Logistic, OldCi, NewCi };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::NewCi;
    int n_bits = 32;
    SelectorKind selector = SelectorKind::G1;
    bool decimate = true;
    int c = 0; ///< old CI only, 0 means 3N
    double mu = kDefaultMu;
};

/// Builds a generator from one integer seed via seed_from_t. The logistic maps
/// draw their start points from t (round map) and y0b (strategy map).
AnyGenerator make_generator(const GeneratorSpec& spec, std::uint64_t seed);

GeneratorKind parse_generator_kind(std::string_view name);
std::string to_string(GeneratorKind kind);
SelectorKind parse_selector_kind(std::string_view name);

} // namespace cirng
