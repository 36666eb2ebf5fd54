#include "cirng/bitgen/generator.hpp"

#include "cirng/bitgen/seeding.hpp"

#include <stdexcept>

namespace cirng {

BitSeq take_bits(AnyGenerator& gen, std::size_t count) {
    return std::visit([count](auto& g) { return take_bits(g, count); }, gen);
}

AnyGenerator make_generator(const GeneratorSpec& spec, std::uint64_t seed) {
    const TimeSeed s = seed_from_t(seed, spec.n_bits);
    switch (spec.kind) {
    case GeneratorKind::XorShift:
        return XorShift32(s.y0);
    case GeneratorKind::Logistic:
        return LogisticBits(logistic_seed(s.t), spec.mu);
    case GeneratorKind::OldCi:
        return OldCi(s.x0, logistic_seed(s.t), logistic_seed(s.y0b), {spec.n_bits, spec.c, spec.mu});
    case GeneratorKind::NewCi:
        return NewCi({s.x0, s.y0, s.y0b}, {spec.n_bits, spec.selector, spec.decimate});
    }
    throw std::invalid_argument("unknown generator kind");
}

GeneratorKind parse_generator_kind(std::string_view name) {
    if (name == "xorshift") return GeneratorKind::XorShift;
    if (name == "logistic") return GeneratorKind::Logistic;
    if (name == "old-ci") return GeneratorKind::OldCi;
    if (name == "new-ci") return GeneratorKind::NewCi;
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

std::string to_string(GeneratorKind kind) {
    switch (kind) {
    case GeneratorKind::XorShift: return "xorshift";
    case GeneratorKind::Logistic: return "logistic";
    case GeneratorKind::OldCi: return "old-ci";
    case GeneratorKind::NewCi: return "new-ci";
    }
    return "?";
}

SelectorKind parse_selector_kind(std::string_view name) {
    if (name == "g1") return SelectorKind::G1;
    if (name == "g2") return SelectorKind::G2;
    if (name == "mod") return SelectorKind::Mod;
    throw std::invalid_argument("unknown selector '" + std::string(name) + "'");
}

} // namespace cirng
