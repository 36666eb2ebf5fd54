#pragma once

#include "cirng/bitgen/generator.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace cirng {

/// Sequences for the external NIST suite: one file per sequence holding only
/// ASCII '0'/'1' characters, no separators, plus manifest.csv.
struct NistExportConfig {
    std::filesystem::path dir;
    GeneratorSpec spec;
    std::uint64_t base_seed = 1;
    std::size_t count = 100;
    std::size_t length = 1'000'000;
};

struct NistExportEntry {
    std::string file;
    std::uint64_t seed = 0;
};

/// Seed of sequence `index`: the index-th splitmix64 output after base_seed.
std::uint64_t nist_sequence_seed(std::uint64_t base_seed, std::size_t index) noexcept;
std::string nist_file_name(std::size_t index);

/// Writes one sequence file; returns its manifest entry.
NistExportEntry write_nist_sequence(const NistExportConfig& config, std::size_t index);
void write_nist_manifest(const NistExportConfig& config, const std::vector<NistExportEntry>& entries);

std::vector<NistExportEntry> nist_export(const NistExportConfig& config);

} // namespace cirng
