#include "cirng/par/parallel.hpp"

#include <omp.h>

#include <exception>
#include <stdexcept>

namespace cirng::par {
namespace {

// Exceptions must not leave an OpenMP region; keep the first and rethrow.
class FirstError {
public:
    template <class F>
    void run(F&& f) noexcept {
        try {
            f();
        } catch (...) {
#pragma omp critical(cirng_first_error)
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

long as_long(std::size_t n) {
    return static_cast<long>(n);
}

} // namespace

int max_threads() noexcept { return omp_get_max_threads(); }

std::vector<double> balance_experiment(const GeneratorFactory& make, std::size_t num_seqs, std::size_t seq_len,
                                       bool decimated) {
    if (num_seqs == 0 || seq_len == 0) throw std::invalid_argument("balance experiment needs positive counts");
    std::vector<double> out(num_seqs);
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (long run = 0; run < as_long(num_seqs); ++run) {
        err.run([&] {
            AnyGenerator gen = make(static_cast<std::size_t>(run), decimated);
            out[static_cast<std::size_t>(run)] = imbalance_percent(take_bits(gen, seq_len));
        });
    }
    err.rethrow();
    return out;
}

std::vector<double> key_sensitivity_batch(std::span<const SensitivityCase> cases, std::size_t seq_len) {
    std::vector<double> out(cases.size());
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < as_long(cases.size()); ++i) {
        err.run([&] {
            const auto& c = cases[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = key_sensitivity(c.params, c.flipped_bit, seq_len);
        });
    }
    err.rethrow();
    return out;
}

GrayImage jpeg_with_table(const GrayImage& img, const QuantTable& table) {
    GrayImage out(img.width, img.height);
    const int tiles_x = (img.width + 7) / 8, tiles_y = (img.height + 7) / 8;
#pragma omp parallel for collapse(2) schedule(static)
    for (int by = 0; by < tiles_y; ++by)
        for (int bx = 0; bx < tiles_x; ++bx) detail::jpeg_tile(img, out, bx, by, table);
    return out;
}

GrayImage jpeg_like(const GrayImage& img, int level) { return par::jpeg_with_table(img, luminance_table(level)); }

std::vector<SweepRow> attack_sweep(const GrayImage& cover, const BitImage& watermark,
                                   std::span<const StegoKey> keys, const SweepConfig& config) {
    if (keys.empty()) throw std::invalid_argument("attack sweep needs at least one key");
    const std::size_t n_int = config.intensities.size(), n_keys = keys.size();
    std::vector<SweepCell> cells(n_int * n_keys);
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (long c = 0; c < as_long(cells.size()); ++c) {
        err.run([&] {
            const std::size_t i = static_cast<std::size_t>(c) / n_keys, k = static_cast<std::size_t>(c) % n_keys;
            cells[static_cast<std::size_t>(c)] =
                sweep_cell(cover, watermark, keys[k], config, config.intensities[i], sweep_noise_seed(i, k));
        });
    }
    err.rethrow();
    // sum in key order so the rounding matches the serial sweep
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < n_int; ++i) {
        SweepRow row{config.intensities[i], 0.0, 0.0};
        for (std::size_t k = 0; k < n_keys; ++k) {
            row.unauthenticated += cells[i * n_keys + k].unauthenticated;
            row.authenticated += cells[i * n_keys + k].authenticated;
        }
        row.unauthenticated /= static_cast<double>(n_keys);
        row.authenticated /= static_cast<double>(n_keys);
        rows.push_back(row);
    }
    return rows;
}

std::vector<NistExportEntry> nist_export(const NistExportConfig& config) {
    std::filesystem::create_directories(config.dir);
    std::vector<NistExportEntry> entries(config.count);
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < as_long(config.count); ++i) {
        err.run([&] { entries[static_cast<std::size_t>(i)] = write_nist_sequence(config, static_cast<std::size_t>(i)); });
    }
    err.rethrow();
    write_nist_manifest(config, entries);
    return entries;
}

} // namespace cirng::par
