#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cirng/par/parallel.hpp"
#include "cirng/bitgen/xorshift.hpp"

#include <omp.h>

#include <fstream>
#include <iterator>
#include <sstream>

using namespace cirng;
namespace fs = std::filesystem;

namespace {

const int kThreadCounts[] = {1, 2, 3, 8};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch(const std::string& name) {
    const auto p = fs::temp_directory_path() / ("cirng_par_" + name);
    fs::remove_all(p);
    return p;
}

} // namespace

TEST_CASE("balance experiment matches serial") {
    const GeneratorFactory make = [](std::size_t run, bool decimated) {
        GeneratorSpec spec;
        spec.decimate = decimated;
        return make_generator(spec, 1000 + run);
    };
    for (bool dec : {true, false}) {
        const auto serial = balance_experiment(make, 13, 4000, dec);
        for (int t : kThreadCounts) {
            omp_set_num_threads(t);
            CHECK(par::balance_experiment(make, 13, 4000, dec) == serial);
        }
    }
    const GeneratorFactory bad = [](std::size_t run, bool) -> AnyGenerator {
        if (run == 5) throw std::runtime_error("factory failed");
        return XorShift32(1);
    };
    CHECK_THROWS_AS(par::balance_experiment(bad, 8, 10, true), std::runtime_error);
}

TEST_CASE("key sensitivity batch matches serial") {
    std::vector<SensitivityCase> cases;
    for (int i = 0; i < 9; ++i) {
        const auto ts = seed_from_t(777 + i, 32);
        cases.push_back({{{ts.x0, ts.y0, ts.y0b}, {}}, 32 + i * 7});
    }
    const auto serial = key_sensitivity_batch(cases, 3000);
    for (int t : kThreadCounts) {
        omp_set_num_threads(t);
        CHECK(par::key_sensitivity_batch(cases, 3000) == serial);
    }
}

TEST_CASE("jpeg tiles match serial") {
    XorShift32 rng(6);
    GrayImage img(45, 30);
    for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng.next());
    for (int level : {1, 10, 75, 100}) {
        const auto serial = jpeg_like(img, level);
        for (int t : kThreadCounts) {
            omp_set_num_threads(t);
            CHECK(par::jpeg_like(img, level) == serial);
        }
    }
}

TEST_CASE("attack sweep matches serial") {
    const auto cover = make_test_carrier(64, 64);
    const auto wm = make_test_watermark(16, 16);
    const std::vector<StegoKey> keys = {key_from_seed(1), key_from_seed(2), key_from_seed(3)};
    for (auto kind : {AttackKind::Crop, AttackKind::Gauss}) {
        SweepConfig cfg;
        cfg.kind = kind;
        cfg.intensities = {0, 2, 8};
        const auto serial = attack_sweep(cover, wm, keys, cfg);
        for (int t : kThreadCounts) {
            omp_set_num_threads(t);
            const auto p = par::attack_sweep(cover, wm, keys, cfg);
            REQUIRE(p.size() == serial.size());
            for (std::size_t i = 0; i < p.size(); ++i) {
                CHECK(p[i].intensity == serial[i].intensity);
                CHECK(p[i].unauthenticated == serial[i].unauthenticated);
                CHECK(p[i].authenticated == serial[i].authenticated);
            }
        }
    }
}

TEST_CASE("nist export: serial and parallel write identical files") {
    NistExportConfig cfg;
    cfg.count = 6;
    cfg.length = 5000;
    cfg.base_seed = 42;
    cfg.dir = scratch("serial");
    const auto serial = nist_export(cfg);
    NistExportConfig pcfg = cfg;
    pcfg.dir = scratch("parallel");
    omp_set_num_threads(3);
    const auto parallel = par::nist_export(pcfg);
    REQUIRE(serial.size() == 6);
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].file == parallel[i].file);
        CHECK(serial[i].seed == parallel[i].seed);
        CHECK(slurp(cfg.dir / serial[i].file) == slurp(pcfg.dir / parallel[i].file));
    }
    CHECK(slurp(cfg.dir / "manifest.csv") == slurp(pcfg.dir / "manifest.csv"));
    fs::remove_all(cfg.dir);
    fs::remove_all(pcfg.dir);
}

TEST_CASE("nist export format") {
    NistExportConfig cfg;
    cfg.count = 3;
    cfg.length = 1000;
    cfg.base_seed = 9;
    cfg.dir = scratch("format");
    const auto entries = nist_export(cfg);

    std::istringstream manifest(slurp(cfg.dir / "manifest.csv"));
    std::string line;
    std::getline(manifest, line);
    CHECK(line == "index,file,seed,generator,n_bits,length");
    std::size_t rows = 0;
    while (std::getline(manifest, line)) {
        CHECK(line.starts_with(std::to_string(rows) + "," + entries[rows].file + "," +
                               std::to_string(entries[rows].seed) + ",new-ci,32,1000"));
        ++rows;
    }
    CHECK(rows == 3);

    for (const auto& e : entries) {
        const auto text = slurp(cfg.dir / e.file);
        REQUIRE(text.size() == 1000);
        CHECK(text.find_first_not_of("01") == std::string::npos);
        // file content is the generator's stream for the listed seed
        AnyGenerator gen = make_generator(cfg.spec, e.seed);
        CHECK(text == bits_to_string(take_bits(gen, 1000)));
    }
    CHECK(entries[0].seed != entries[1].seed);
    CHECK(nist_sequence_seed(9, 1) == entries[1].seed);

    const auto again = nist_export(cfg);
    CHECK(slurp(cfg.dir / again[2].file) == bits_to_string([&] {
              AnyGenerator g = make_generator(cfg.spec, entries[2].seed);
              return take_bits(g, 1000);
          }()));
    fs::remove_all(cfg.dir);
}
