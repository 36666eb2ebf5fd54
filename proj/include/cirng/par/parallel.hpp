#pragma once

// OpenMP versions of the embarrassingly parallel kernels. Each returns exactly
// what its serial counterpart returns; results are assembled in index order.

#include "cirng/attacklab/attacks.hpp"
#include "cirng/attacklab/sweep.hpp"
#include "cirng/statlab/experiments.hpp"
#include "cirng/statlab/nist_export.hpp"

#include <span>
#include <vector>

namespace cirng::par {

int max_threads() noexcept;

std::vector<double> balance_experiment(const GeneratorFactory& make, std::size_t num_seqs, std::size_t seq_len,
                                       bool decimated);

std::vector<double> key_sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t seq_len);

/// Tiles are independent; each writes a disjoint 8x8 patch of the output.
GrayImage jpeg_with_table(const GrayImage& img, const QuantTable& table);
GrayImage jpeg_like(const GrayImage& img, int level);

std::vector<SweepRow> attack_sweep(const GrayImage& cover, const BitImage& watermark,
                                   std::span<const StegoKey> keys, const SweepConfig& config);

std::vector<NistExportEntry> nist_export(const NistExportConfig& config);

} // namespace cirng::par
