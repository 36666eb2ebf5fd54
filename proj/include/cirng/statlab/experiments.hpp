#pragma once

#include "cirng/bitgen/chaotic.hpp"
#include "cirng/bitgen/generator.hpp"
#include "cirng/bitgen/seeding.hpp"
#include "cirng/bitseq.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace cirng {

std::size_t hamming(const BitSeq& a, const BitSeq& b);

/// |#ones - #zeros| / n as a percentage.
double imbalance_percent(const BitSeq& s);

/// Builds the generator for run `run`; `decimated = false` asks for the no-mark variant.
/// Must be callable concurrently.
using GeneratorFactory = std::function<AnyGenerator(std::size_t run, bool decimated)>;

/// Imbalance percentage of `num_seqs` independently seeded sequences, in run order.
std::vector<double> balance_experiment(const GeneratorFactory& make, std::size_t num_seqs, std::size_t seq_len,
                                       bool decimated);

/// New CI parameters whose seed bits are addressed as one key:
/// indices [0, N) are x0 components (x_1 first), [N, N+32) the bits of y0 from
/// the least significant, [N+32, N+64) the bits of y0b.
struct KeyParams {
    NewCiSeed seed;
    NewCiConfig config;
};

int key_bit_count(const KeyParams& params) noexcept;
/// Copy of `params` with one key bit flipped; a zeroed XORshift seed is coerced to 1.
KeyParams flip_key_bit(const KeyParams& params, int index);

/// Variance ratio P = H / n between the streams of `params` and its one-bit neighbour.
double key_sensitivity(const KeyParams& params, int flipped_bit_index, std::size_t seq_len);

struct SensitivityCase {
    KeyParams params;
    int flipped_bit = 0;
};

std::vector<double> key_sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t seq_len);

struct PairCount {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint64_t count = 0;
};

/// Histogram of N-bit states plus counts of adjacent pairs (s_i, s_{i+1}).
struct PairIntensity {
    int n_bits = 0;
    std::vector<std::uint64_t> histogram; ///< 2^N bins
    std::vector<PairCount> pairs;         ///< nonzero cells, sorted by (x, y)

    std::uint64_t total_pairs() const noexcept;
};

PairIntensity pair_intensity(std::span<const std::uint64_t> states, int n_bits);

} // namespace cirng
