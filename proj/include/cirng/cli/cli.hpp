#pragma once

#include "cirng/bitgen/generator.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cirng::cli {

/// Parses and runs one command line (without the program name). Returns the
/// process exit code: 0 on success, nonzero on usage or operational errors.
/// Statistical test failures are reported as data and still return 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Explicit seed if given, else CI_RAND_SEED, else the clock.
std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed, int n_bits);

/// Recorded New CI inputs: `x0 <bits>`, `m <ints>`, `b <ints>` lines, '#' comments.
struct TraceFixture {
    std::uint64_t x0 = 0;
    int n_bits = 0;
    std::vector<int> m;
    std::vector<int> b;
};
TraceFixture read_trace(const std::filesystem::path& path);

struct BenchRow {
    std::string generator;
    std::size_t bits = 0;
    double seconds = 0.0; ///< best of the timed repeats
    double ns_per_bit = 0.0;
};

/// One warm-up pass, then `repeats` timed passes per generator.
std::vector<BenchRow> bench_generators(const std::vector<GeneratorSpec>& specs, std::size_t bits, int repeats,
                                       std::uint64_t seed);

} // namespace cirng::cli
