#include "cirng/statlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace cirng {

std::size_t hamming(const BitSeq& a, const BitSeq& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming distance needs equal lengths");
    std::size_t h = 0;
    for (std::size_t i = 0; i < a.size(); ++i) h += a[i] != b[i];
    return h;
}

double imbalance_percent(const BitSeq& s) {
    if (s.empty()) return 0.0;
    const auto ones = static_cast<double>(count_ones(s));
    const auto zeros = static_cast<double>(s.size()) - ones;
    return 100.0 * std::abs(ones - zeros) / static_cast<double>(s.size());
}

std::vector<double> balance_experiment(const GeneratorFactory& make, std::size_t num_seqs, std::size_t seq_len,
                                       bool decimated) {
    if (num_seqs == 0 || seq_len == 0) throw std::invalid_argument("balance experiment needs positive counts");
    std::vector<double> out(num_seqs);
    for (std::size_t run = 0; run < num_seqs; ++run) {
        AnyGenerator gen = make(run, decimated);
        out[run] = imbalance_percent(take_bits(gen, seq_len));
    }
    return out;
}

int key_bit_count(const KeyParams& params) noexcept { return params.config.n_bits + 64; }

KeyParams flip_key_bit(const KeyParams& params, int index) {
    const int n = params.config.n_bits;
    if (index < 0 || index >= key_bit_count(params)) throw std::invalid_argument("key bit index out of range");
    KeyParams out = params;
    if (index < n) {
        out.seed.x0 ^= position_mask(n, index);
    } else if (index < n + 32) {
        out.seed.y0 = coerce_nonzero(out.seed.y0 ^ (1U << (index - n)));
    } else {
        out.seed.y0b = coerce_nonzero(out.seed.y0b ^ (1U << (index - n - 32)));
    }
    return out;
}

double key_sensitivity(const KeyParams& params, int flipped_bit_index, std::size_t seq_len) {
    if (seq_len == 0) throw std::invalid_argument("key sensitivity needs seq_len >= 1");
    NewCi a(params.seed, params.config);
    const KeyParams other = flip_key_bit(params, flipped_bit_index);
    NewCi b(other.seed, other.config);
    return static_cast<double>(hamming(take_bits(a, seq_len), take_bits(b, seq_len))) /
           static_cast<double>(seq_len);
}

std::vector<double> key_sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t seq_len) {
    std::vector<double> out;
    out.reserve(cases.size());
    for (const auto& c : cases) out.push_back(key_sensitivity(c.params, c.flipped_bit, seq_len));
    return out;
}

std::uint64_t PairIntensity::total_pairs() const noexcept {
    std::uint64_t t = 0;
    for (const auto& p : pairs) t += p.count;
    return t;
}

PairIntensity pair_intensity(std::span<const std::uint64_t> states, int n_bits) {
    if (n_bits < 1 || n_bits > 16) throw std::invalid_argument("pair intensity supports N <= 16");
    PairIntensity out;
    out.n_bits = n_bits;
    out.histogram.assign(std::size_t{1} << n_bits, 0);
    const std::uint64_t limit = std::uint64_t{1} << n_bits;
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i] >= limit) throw std::invalid_argument("state does not fit in N bits");
        ++out.histogram[states[i]];
        if (i > 0) ++cells[(states[i - 1] << n_bits) | states[i]];
    }
    out.pairs.reserve(cells.size());
    for (const auto& [key, count] : cells) {
        out.pairs.push_back({static_cast<std::uint32_t>(key >> n_bits),
                             static_cast<std::uint32_t>(key & (limit - 1)), count});
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PairCount& a, const PairCount& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
    return out;
}

} // namespace cirng
