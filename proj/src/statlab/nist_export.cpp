#include "cirng/statlab/nist_export.hpp"

#include "cirng/bitgen/seeding.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cirng {
namespace {

void write_or_throw(std::ofstream& out, const std::filesystem::path& path, const char* data, std::size_t n) {
    out.write(data, static_cast<std::streamsize>(n));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

} // namespace

std::uint64_t nist_sequence_seed(std::uint64_t base_seed, std::size_t index) noexcept {
    std::uint64_t x = base_seed + 0x9E3779B97F4A7C15ULL * index;
    return splitmix64(x);
}

std::string nist_file_name(std::size_t index) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "seq_%04zu.txt", index);
    return buf;
}

NistExportEntry write_nist_sequence(const NistExportConfig& config, std::size_t index) {
    const NistExportEntry entry{nist_file_name(index), nist_sequence_seed(config.base_seed, index)};
    AnyGenerator gen = make_generator(config.spec, entry.seed);
    const BitSeq bits = take_bits(gen, config.length);
    std::string text(bits.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i) text[i] = static_cast<char>('0' + bits[i]);
    const auto path = config.dir / entry.file;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    write_or_throw(out, path, text.data(), text.size());
    return entry;
}

void write_nist_manifest(const NistExportConfig& config, const std::vector<NistExportEntry>& entries) {
    const auto path = config.dir / "manifest.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << "index,file,seed,generator,n_bits,length\n";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        out << i << ',' << entries[i].file << ',' << entries[i].seed << ',' << to_string(config.spec.kind) << ','
            << config.spec.n_bits << ',' << config.length << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::vector<NistExportEntry> nist_export(const NistExportConfig& config) {
    std::filesystem::create_directories(config.dir);
    std::vector<NistExportEntry> entries;
    entries.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) entries.push_back(write_nist_sequence(config, i));
    write_nist_manifest(config, entries);
    return entries;
}

} // namespace cirng
