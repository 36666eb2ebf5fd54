#include "cirng/stego/key.hpp"

#include "cirng/bitgen/chaotic.hpp"
#include "cirng/bitgen/seeding.hpp"
#include "cirng/errors.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace cirng {
namespace {

template <class T>
T parse_number(std::string_view field, std::string_view text, int base) {
    if (base == 16 && (text.starts_with("0x") || text.starts_with("0X"))) text.remove_prefix(2);
    T v{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v, base);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("key: bad value for " + std::string(field) + ": '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

StegoKey key_from_seed(std::uint64_t seed, MixMode mix, EmbedMode embed, bool authenticated) {
    std::uint64_t s = seed;
    StegoKey key;
    key.x0 = splitmix64(s);
    key.y0 = coerce_nonzero(static_cast<std::uint32_t>(splitmix64(s)));
    key.y0b = coerce_nonzero(static_cast<std::uint32_t>(splitmix64(s)));
    key.mix = mix;
    key.embed = embed;
    key.authenticated = authenticated;
    return key;
}

std::string format_key(const StegoKey& key) {
    std::ostringstream os;
    os << "x0=" << std::hex << key.x0 << std::dec << " y0=" << key.y0 << " y0b=" << key.y0b << " n=" << key.n_bits
       << " mix=" << (key.mix == MixMode::Xor ? "xor" : "ci")
       << " mode=" << (key.embed == EmbedMode::Switch ? "switch" : "subst") << " auth=" << (key.authenticated ? 1 : 0);
    return os.str();
}

StegoKey parse_key(std::string_view text) {
    std::map<std::string, std::string, std::less<>> fields;
    std::istringstream is{std::string(text)};
    std::string token;
    while (is >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("key: expected name=value, got '" + token + "'");
        fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    auto need = [&](std::string_view name) -> const std::string& {
        const auto it = fields.find(name);
        if (it == fields.end()) throw ParseError("key: missing field " + std::string(name));
        return it->second;
    };

    StegoKey key;
    key.n_bits = parse_number<int>("n", need("n"), 10);
    if (key.n_bits < 2 || key.n_bits > 64) throw ParseError("key: n must lie in [2, 64]");
    key.x0 = parse_number<std::uint64_t>("x0", need("x0"), 16);
    if ((key.x0 & ~state_mask(key.n_bits)) != 0) throw ParseError("key: x0 does not fit in n bits");
    key.y0 = coerce_nonzero(parse_number<std::uint32_t>("y0", need("y0"), 10));
    key.y0b = coerce_nonzero(parse_number<std::uint32_t>("y0b", need("y0b"), 10));

    const auto& mix = need("mix");
    if (mix == "xor") key.mix = MixMode::Xor;
    else if (mix == "ci") key.mix = MixMode::Chaotic;
    else throw ParseError("key: mix must be xor or ci");

    const auto& mode = need("mode");
    if (mode == "switch") key.embed = EmbedMode::Switch;
    else if (mode == "subst") key.embed = EmbedMode::Substitute;
    else throw ParseError("key: mode must be switch or subst");

    const auto& auth = need("auth");
    if (auth != "0" && auth != "1") throw ParseError("key: auth must be 0 or 1");
    key.authenticated = auth == "1";
    return key;
}

StegoKey read_key_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open key file " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return parse_key(os.str());
}

void write_key_file(const std::filesystem::path& path, const StegoKey& key) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot create key file " + path.string());
    out << format_key(key) << '\n';
}

} // namespace cirng
