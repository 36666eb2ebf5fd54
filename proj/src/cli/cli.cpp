#include "cirng/cli/cli.hpp"

#include "cirng/attacklab/sweep.hpp"
#include "cirng/bitgen/seeding.hpp"
#include "cirng/cli/bitfile.hpp"
#include "cirng/errors.hpp"
#include "cirng/imagery/netpbm.hpp"
#include "cirng/par/parallel.hpp"
#include "cirng/statlab/battery.hpp"
#include "cirng/statlab/linear_complexity.hpp"
#include "cirng/statlab/special.hpp"
#include "cirng/stego/stego.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace cirng::cli {
namespace {

using Clock = std::chrono::steady_clock;

struct GenOptions {
    std::string generator = "new-ci";
    int n_bits = 32;
    std::string selector = "g1";
    int c = 0;
    double mu = kDefaultMu;

    GeneratorSpec spec() const {
        GeneratorSpec s;
        s.kind = parse_generator_kind(generator);
        s.n_bits = n_bits;
        if (selector == "none-mark") {
            s.decimate = false;
        } else {
            s.selector = parse_selector_kind(selector);
        }
        s.c = c;
        s.mu = mu;
        return s;
    }
};

void add_generator_options(CLI::App* app, GenOptions& g) {
    app->add_option("--generator,-g", g.generator, "xorshift | logistic | old-ci | new-ci")->capture_default_str();
    app->add_option("--n-bits,-N", g.n_bits, "state width N")->capture_default_str()->check(CLI::Range(1, 64));
    app->add_option("--selector", g.selector, "new CI round size rule: g1 | g2 | mod | none-mark")
        ->capture_default_str();
    app->add_option("--c", g.c, "old CI extra flips per round (0 = 3N)")->capture_default_str();
    app->add_option("--mu", g.mu, "logistic parameter")->capture_default_str();
}

std::uint64_t derived_seed(std::uint64_t base, std::size_t index) { return nist_sequence_seed(base, index); }

// Runs `fn` against the file at `path`, or against `fallback` when path is empty.
void with_sink(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(fallback);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    fn(f);
    if (!f) throw std::runtime_error("failed writing " + path);
}

std::string format_double(double v, int precision = 6) {
    std::ostringstream s;
    s << std::setprecision(precision) << v;
    return s.str();
}

std::vector<int> parse_ints(std::istringstream& in) {
    std::vector<int> v;
    int x = 0;
    while (in >> x) v.push_back(x);
    if (!in.eof()) throw ParseError("trace: expected integers");
    return v;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
    GenOptions gen;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::string format = "ascii";
    std::string output;
    std::string trace;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    BitSeq bits;
    if (!a.trace.empty()) {
        const TraceFixture t = read_trace(a.trace);
        TraceCi ci(t.x0, t.n_bits, t.m, t.b);
        try {
            bits = take_bits(ci, a.count);
        } catch (const std::out_of_range&) {
            throw std::runtime_error("trace " + a.trace + " exhausted before " + std::to_string(a.count) + " bits");
        }
    } else {
        const GeneratorSpec spec = a.gen.spec();
        const std::uint64_t seed = resolve_seed(*a.seed_opt ? std::optional(a.seed) : std::nullopt, spec.n_bits);
        err << "seed " << seed << '\n';
        AnyGenerator g = make_generator(spec, seed);
        bits = take_bits(g, a.count);
    }
    const BitFormat fmt = parse_bit_format(a.format);
    if (a.output.empty()) {
        write_bits(out, bits, fmt);
    } else {
        write_bits(a.output, bits, fmt);
    }
    return 0;
}

// ---- test ---------------------------------------------------------------

struct TestArgs {
    std::string file;
    std::string format = "ascii";
    std::vector<std::string> tests = {"monobit", "serial", "poker", "runs", "autocorr"};
    double alpha = kDefaultAlpha;
    int poker_m = 8;
    std::size_t autocorr_d = 8;
    std::string csv;
};

TestReport run_named_test(const std::string& name, const BitSeq& s, const TestArgs& a) {
    if (name == "monobit") return monobit(s, a.alpha);
    if (name == "serial") return serial2(s, a.alpha);
    if (name == "poker") return poker(s, a.poker_m, a.alpha);
    if (name == "runs") return runs(s, a.alpha);
    if (name == "autocorr") return autocorr(s, a.autocorr_d, a.alpha);
    throw std::invalid_argument("unknown test '" + name + "'");
}

int cmd_test(const TestArgs& a, std::ostream& out) {
    const BitSeq bits = read_bits(a.file, parse_bit_format(a.format));
    struct Row {
        std::string name;
        std::optional<TestReport> report;
        std::string error;
    };
    std::vector<Row> rows;
    for (const auto& name : a.tests) {
        try {
            rows.push_back({name, run_named_test(name, bits, a), {}});
        } catch (const std::invalid_argument& e) {
            rows.push_back({name, std::nullopt, e.what()});
        }
    }

    out << bits.size() << " bits, alpha " << a.alpha << '\n';
    out << std::left << std::setw(10) << "test" << std::right << std::setw(14) << "statistic" << std::setw(6)
        << "dof" << std::setw(14) << "p_value" << "  result\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.name << std::right;
        if (!r.report) {
            out << "  error: " << r.error << '\n';
            continue;
        }
        const auto& t = *r.report;
        out << std::setw(14) << format_double(t.statistic) << std::setw(6)
            << (t.dof ? std::to_string(*t.dof) : std::string("-")) << std::setw(14) << format_double(t.p_value)
            << "  " << (t.passed ? "pass" : "FAIL") << '\n';
    }

    const std::string csv = a.csv.empty() ? a.file + ".csv" : a.csv;
    with_sink(csv, out, [&](std::ostream& f) {
        f << "test,statistic,dof,p_value,passed\n";
        for (const auto& r : rows) {
            if (!r.report) {
                f << r.name << ",,,,error\n";
                continue;
            }
            const auto& t = *r.report;
            f << r.name << ',' << std::setprecision(10) << t.statistic << ',' << (t.dof ? std::to_string(*t.dof) : "")
              << ',' << t.p_value << ',' << (t.passed ? 1 : 0) << '\n';
        }
    });
    return 0;
}

// ---- bench --------------------------------------------------------------

struct BenchArgs {
    std::vector<std::string> generators = {"xorshift", "logistic", "old-ci", "new-ci"};
    std::size_t bits = 200'000;
    int n_bits = 32;
    int repeats = 5;
    std::uint64_t seed = 484088;
    std::string csv;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    std::vector<GeneratorSpec> specs;
    for (const auto& name : a.generators) {
        GeneratorSpec s;
        s.kind = parse_generator_kind(name);
        s.n_bits = a.n_bits;
        specs.push_back(s);
    }
    const auto rows = bench_generators(specs, a.bits, a.repeats, a.seed);
    out << std::left << std::setw(10) << "generator" << std::right << std::setw(10) << "bits" << std::setw(14)
        << "seconds" << std::setw(12) << "ns/bit" << '\n';
    for (const auto& r : rows) {
        out << std::left << std::setw(10) << r.generator << std::right << std::setw(10) << r.bits << std::setw(14)
            << format_double(r.seconds, 4) << std::setw(12) << format_double(r.ns_per_bit, 4) << '\n';
    }
    if (!a.csv.empty()) {
        with_sink(a.csv, out, [&](std::ostream& f) {
            f << "generator,bits,seconds,ns_per_bit\n";
            for (const auto& r : rows) f << r.generator << ',' << r.bits << ',' << r.seconds << ',' << r.ns_per_bit << '\n';
        });
    }
    return 0;
}

// ---- nist-export --------------------------------------------------------

struct NistArgs {
    GenOptions gen;
    std::string dir;
    std::size_t count = 100;
    std::size_t length = 1'000'000;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    bool serial = false;
};

int cmd_nist(const NistArgs& a, std::ostream& out, std::ostream& err) {
    NistExportConfig cfg;
    cfg.dir = a.dir;
    cfg.spec = a.gen.spec();
    cfg.base_seed = resolve_seed(*a.seed_opt ? std::optional(a.seed) : std::nullopt, cfg.spec.n_bits);
    cfg.count = a.count;
    cfg.length = a.length;
    err << "seed " << cfg.base_seed << '\n';
    const auto entries = a.serial ? nist_export(cfg) : par::nist_export(cfg);
    out << "wrote " << entries.size() << " sequences of " << cfg.length << " bits to " << cfg.dir.string()
        << " (manifest.csv)\n";
    return 0;
}

// ---- watermarking -------------------------------------------------------

GrayImage load_cover(const std::string& path) { return path.empty() ? make_test_carrier(256, 256) : read_pgm(path); }
BitImage load_watermark(const std::string& path) { return path.empty() ? make_test_watermark() : read_pbm(path); }

struct EmbedArgs {
    std::string cover, watermark, key, output;
};

int cmd_wm_embed(const EmbedArgs& a, std::ostream& out) {
    const StegoKey key = read_key_file(a.key);
    const GrayImage stego = embed(load_cover(a.cover), load_watermark(a.watermark), key);
    write_pgm(a.output, stego);
    out << "embedded into " << a.output << '\n';
    return 0;
}

struct ExtractArgs {
    std::string image, key, original, reference, output;
    int width = 64, height = 64;
};

int cmd_wm_extract(const ExtractArgs& a, std::ostream& out) {
    const StegoKey key = read_key_file(a.key);
    const GrayImage image = read_pgm(a.image);
    std::optional<GrayImage> original;
    if (!a.original.empty()) original = read_pgm(a.original);
    const GrayImage* orig = original ? &*original : nullptr;
    std::optional<BitImage> reference;
    if (!a.reference.empty()) reference = read_pbm(a.reference);
    const int w = reference ? reference->width : a.width;
    const int h = reference ? reference->height : a.height;
    const BitImage wm = extract(image, key, BitPlaneSpec::standard(), w, h, orig);
    if (!a.output.empty()) write_pbm(a.output, wm);
    if (reference) out << "similarity " << format_double(similarity(wm, *reference), 6) << '\n';
    return 0;
}

struct AttackArgs {
    std::string attack;
    std::vector<double> levels;
    int keys = 10;
    std::uint64_t key_seed = 1;
    std::string mix = "ci";
    std::string mode = "subst";
    std::string cover, watermark, csv;
    bool bilinear = false;
    bool unwatermarked = false;
    bool serial = false;
};

std::vector<double> default_levels(AttackKind kind) {
    switch (kind) {
    case AttackKind::Crop: return {10, 50, 100, 200};
    case AttackKind::Rotate: return {2, 5, 10, 25, 50};
    case AttackKind::Jpeg: return {2, 5, 10, 20};
    case AttackKind::Gauss: return {1, 2, 5, 10};
    }
    return {};
}

// Same protocol as a sweep, but nothing is embedded: the cover itself is attacked.
std::vector<SweepRow> unwatermarked_sweep(const GrayImage& cover, const BitImage& wm, std::span<const StegoKey> keys,
                                          const SweepConfig& cfg) {
    std::vector<SweepRow> rows;
    for (std::size_t i = 0; i < cfg.intensities.size(); ++i) {
        SweepRow row{cfg.intensities[i], 0.0, 0.0};
        for (std::size_t k = 0; k < keys.size(); ++k) {
            const AttackSpec spec{cfg.kind, cfg.intensities[i], sweep_noise_seed(i, k), cfg.interpolation};
            const GrayImage attacked = apply_attack(cover, spec);
            for (bool auth : {false, true}) {
                StegoKey key = keys[k];
                key.authenticated = auth;
                const GrayImage* orig = key.embed == EmbedMode::Switch ? &cover : nullptr;
                (auth ? row.authenticated : row.unauthenticated) +=
                    extract_and_score(attacked, key, cfg.plane, wm, orig).similarity;
            }
        }
        row.unauthenticated /= static_cast<double>(keys.size());
        row.authenticated /= static_cast<double>(keys.size());
        rows.push_back(row);
    }
    return rows;
}

MixMode parse_mix(const std::string& s) {
    if (s == "ci") return MixMode::Chaotic;
    if (s == "xor") return MixMode::Xor;
    throw std::invalid_argument("unknown mix '" + s + "'");
}

EmbedMode parse_embed(const std::string& s) {
    if (s == "subst") return EmbedMode::Substitute;
    if (s == "switch") return EmbedMode::Switch;
    throw std::invalid_argument("unknown mode '" + s + "'");
}

int cmd_wm_attack(const AttackArgs& a, std::ostream& out) {
    if (a.keys < 1) throw std::invalid_argument("--keys must be >= 1");
    SweepConfig cfg;
    cfg.kind = parse_attack_kind(a.attack);
    cfg.intensities = a.levels.empty() ? default_levels(cfg.kind) : a.levels;
    cfg.interpolation = a.bilinear ? Interpolation::Bilinear : Interpolation::Nearest;
    std::vector<StegoKey> keys;
    for (int i = 0; i < a.keys; ++i) {
        keys.push_back(key_from_seed(a.key_seed + static_cast<std::uint64_t>(i), parse_mix(a.mix), parse_embed(a.mode)));
    }
    const GrayImage cover = load_cover(a.cover);
    const BitImage wm = load_watermark(a.watermark);
    std::vector<SweepRow> rows;
    if (a.unwatermarked) {
        rows = unwatermarked_sweep(cover, wm, keys, cfg);
    } else {
        rows = a.serial ? attack_sweep(cover, wm, keys, cfg) : par::attack_sweep(cover, wm, keys, cfg);
    }
    with_sink(a.csv, out, [&](std::ostream& f) {
        f << "intensity,unauth_similarity,auth_similarity\n";
        for (const auto& r : rows) {
            char sims[64];
            std::snprintf(sims, sizeof sims, "%.2f,%.2f", r.unauthenticated, r.authenticated);
            f << format_double(r.intensity) << ',' << sims << '\n';
        }
    });
    return 0;
}

// ---- experiment ---------------------------------------------------------

struct ExperimentArgs {
    std::string which;
    std::string out_dir;
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    std::size_t count = 0;  ///< 0 = the experiment's default size
    std::size_t length = 0; ///< 0 = the experiment's default length
    int n_bits = 0;         ///< 0 = the experiment's default width
    bool slow = false;
    bool serial = false;
};

class ExperimentSink {
public:
    ExperimentSink(const std::string& dir, std::ostream& out) : dir_(dir), out_(out) {
        if (!dir_.empty()) std::filesystem::create_directories(dir_);
    }
    void write(const std::string& name, const std::function<void(std::ostream&)>& fn) {
        with_sink(dir_.empty() ? std::string() : (std::filesystem::path(dir_) / name).string(), out_, fn);
    }

private:
    std::string dir_;
    std::ostream& out_;
};

template <class T>
T or_default(T v, T dflt) {
    return v == T{} ? dflt : v;
}

int experiment_fig1(const ExperimentArgs& a, std::uint64_t seed, ExperimentSink& sink, std::ostream& err) {
    const int n = or_default(a.n_bits, 4);
    if (n > 16) throw std::invalid_argument("fig1 supports N <= 16");
    const std::size_t count = or_default<std::size_t>(a.count, 1'000'000);
    GeneratorSpec spec;
    spec.n_bits = n;
    AnyGenerator g = make_generator(spec, seed);
    auto& ci = std::get<NewCi>(g);
    std::vector<std::uint64_t> states(count);
    for (auto& s : states) s = ci.next_state();
    const auto pi = pair_intensity(states, n);
    std::vector<double> probs(pi.histogram.size(), 1.0 / static_cast<double>(pi.histogram.size()));
    std::vector<std::size_t> obs(pi.histogram.begin(), pi.histogram.end());
    const auto gof = chi_square_gof(obs, probs, kUniformityAlpha);
    err << "uniformity chi2 " << gof.statistic << " p " << gof.p_value << '\n';
    sink.write("fig1_histogram.csv", [&](std::ostream& f) {
        f << "state,count\n";
        for (std::size_t i = 0; i < pi.histogram.size(); ++i) f << i << ',' << pi.histogram[i] << '\n';
    });
    sink.write("fig1_pairs.csv", [&](std::ostream& f) {
        f << "x,y,count\n";
        for (const auto& p : pi.pairs) f << p.x << ',' << p.y << ',' << p.count << '\n';
    });
    return 0;
}

int experiment_fig2(const ExperimentArgs& a, std::uint64_t seed, ExperimentSink& sink, std::ostream& err) {
    const std::size_t seqs = or_default<std::size_t>(a.count, 100);
    const std::size_t len = or_default<std::size_t>(a.length, 100'000);
    const int n = or_default(a.n_bits, 32);
    const GeneratorFactory make = [&](std::size_t run, bool decimated) {
        GeneratorSpec spec;
        spec.n_bits = n;
        spec.decimate = decimated;
        return make_generator(spec, derived_seed(seed, run));
    };
    auto balance = a.serial ? &cirng::balance_experiment : &par::balance_experiment;
    const auto dec = balance(make, seqs, len, true);
    const auto nomark = balance(make, seqs, len, false);
    double md = 0, mn = 0;
    for (std::size_t i = 0; i < seqs; ++i) md += dec[i], mn += nomark[i];
    err << "mean imbalance: decimated " << md / double(seqs) << "%, no mark " << mn / double(seqs) << "%\n";
    sink.write("fig2_balance.csv", [&](std::ostream& f) {
        f << "run,decimated_pct,no_mark_pct\n";
        for (std::size_t i = 0; i < seqs; ++i) f << i << ',' << dec[i] << ',' << nomark[i] << '\n';
    });
    return 0;
}

int experiment_fig3(const ExperimentArgs& a, std::uint64_t seed, ExperimentSink& sink, std::ostream& err) {
    const std::size_t pairs = or_default<std::size_t>(a.count, 20);
    const std::size_t len = or_default<std::size_t>(a.length, 100'000);
    const int n = or_default(a.n_bits, 32);
    std::vector<SensitivityCase> cases;
    for (std::size_t i = 0; i < pairs; ++i) {
        const TimeSeed ts = seed_from_t(derived_seed(seed, i), n);
        NewCiConfig cfg;
        cfg.n_bits = n;
        // XORshift seed bits; x0 bits are xor-linear and only ever move 1/N of the stream
        cases.push_back({{{ts.x0, ts.y0, ts.y0b}, cfg}, n + static_cast<int>(i % 64)});
    }
    const auto p = a.serial ? key_sensitivity_batch(cases, len) : par::key_sensitivity_batch(cases, len);
    double mean = 0;
    for (double v : p) mean += v;
    err << "mean P " << mean / double(p.size()) << '\n';
    sink.write("fig3_sensitivity.csv", [&](std::ostream& f) {
        f << "pair,flipped_bit,p\n";
        for (std::size_t i = 0; i < p.size(); ++i) f << i << ',' << cases[i].flipped_bit << ',' << p[i] << '\n';
    });
    return 0;
}

int experiment_fig4(const ExperimentArgs& a, std::uint64_t seed, ExperimentSink& sink, std::ostream&) {
    const std::size_t len = or_default<std::size_t>(a.length, 2000);
    GeneratorSpec spec;
    spec.n_bits = or_default(a.n_bits, 32);
    AnyGenerator g = make_generator(spec, seed);
    const auto prof = lc_profile(take_bits(g, len));
    sink.write("fig4_linear_complexity.csv", [&](std::ostream& f) {
        f << "i,lc,ideal\n";
        for (std::size_t i = 1; i <= prof.size(); ++i) f << i << ',' << prof.lc[i] << ',' << LcProfile::ideal(i) << '\n';
    });
    return 0;
}

int experiment_tables(const ExperimentArgs& a, std::uint64_t seed, ExperimentSink& sink, std::ostream&) {
    const std::size_t len = or_default<std::size_t>(a.length, 200'000);
    const int n = or_default(a.n_bits, 32);
    struct Variant {
        std::string name;
        GeneratorSpec spec;
    };
    std::vector<Variant> variants;
    for (auto kind : {GeneratorKind::XorShift, GeneratorKind::Logistic, GeneratorKind::OldCi, GeneratorKind::NewCi}) {
        GeneratorSpec s;
        s.kind = kind;
        s.n_bits = n;
        variants.push_back({to_string(kind), s});
    }
    GeneratorSpec mod;
    mod.n_bits = n;
    mod.selector = SelectorKind::Mod;
    variants.push_back({"new-ci-mod", mod});
    GeneratorSpec nomark;
    nomark.n_bits = n;
    nomark.decimate = false;
    variants.push_back({"new-ci-no-mark", nomark});

    sink.write("tables_battery.csv", [&](std::ostream& f) {
        f << "generator,seconds,monobit,serial,poker,runs,autocorr,all_pass\n";
        for (const auto& v : variants) {
            AnyGenerator g = make_generator(v.spec, seed);
            const auto t0 = Clock::now();
            const BitSeq bits = take_bits(g, len);
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            const std::function<TestReport()> tests[] = {
                [&] { return monobit(bits); }, [&] { return serial2(bits); }, [&] { return poker(bits, 8); },
                [&] { return runs(bits); }, [&] { return autocorr(bits, 8); }};
            bool all = true;
            f << v.name << ',' << secs;
            for (const auto& test : tests) {
                // a test whose length precondition fails leaves its cell empty
                try {
                    const TestReport t = test();
                    f << ',' << t.statistic;
                    all = all && t.passed;
                } catch (const std::invalid_argument&) {
                    f << ',';
                    all = false;
                }
            }
            f << ',' << (all ? 1 : 0) << '\n';
        }
    });
    return 0;
}

int experiment_period(const ExperimentArgs& a, std::ostream& out) {
    if (!a.slow) throw std::invalid_argument("the full XORshift period walk takes a while; pass --slow");
    XorShift32 x(1);
    std::uint64_t steps = 0;
    do {
        ++steps;
    } while (x.next() != 1U);
    out << "period,expected\n" << steps << ',' << ((std::uint64_t{1} << 32) - 1) << '\n';
    return 0;
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out, std::ostream& err) {
    if (a.which == "period") return experiment_period(a, out);
    const std::uint64_t seed = resolve_seed(*a.seed_opt ? std::optional(a.seed) : std::nullopt, 32);
    err << "seed " << seed << '\n';
    ExperimentSink sink(a.out_dir, out);
    if (a.which == "fig1") return experiment_fig1(a, seed, sink, err);
    if (a.which == "fig2") return experiment_fig2(a, seed, sink, err);
    if (a.which == "fig3") return experiment_fig3(a, seed, sink, err);
    if (a.which == "fig4") return experiment_fig4(a, seed, sink, err);
    if (a.which == "tables") return experiment_tables(a, seed, sink, err);
    throw std::invalid_argument("unknown experiment '" + a.which + "'");
}

} // namespace

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed, int n_bits) {
    if (explicit_seed) return *explicit_seed;
    if (const char* env = std::getenv("CI_RAND_SEED"); env && *env) {
        std::uint64_t v = 0;
        const std::string_view s(env);
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument("CI_RAND_SEED is not an unsigned integer: '" + std::string(s) + "'");
        }
        return v;
    }
    return seed_from_time(n_bits).t;
}

TraceFixture read_trace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace " + path.string());
    TraceFixture t;
    bool have_x0 = false;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "x0") {
            std::string bits;
            ls >> bits;
            if (bits.empty() || bits.size() > 64 || bits.find_first_not_of("01") != std::string::npos) {
                throw ParseError("trace: x0 must be 1..64 binary digits");
            }
            t.n_bits = static_cast<int>(bits.size());
            t.x0 = std::stoull(bits, nullptr, 2);
            have_x0 = true;
        } else if (tag == "m") {
            t.m = parse_ints(ls);
        } else if (tag == "b") {
            t.b = parse_ints(ls);
        } else {
            throw ParseError("trace: unknown line '" + tag + "'");
        }
    }
    if (!have_x0) throw ParseError("trace: missing x0 line");
    return t;
}

std::vector<BenchRow> bench_generators(const std::vector<GeneratorSpec>& specs, std::size_t bits, int repeats,
                                       std::uint64_t seed) {
    if (repeats < 1) throw std::invalid_argument("bench needs at least one repeat");
    std::vector<BenchRow> rows;
    for (const auto& spec : specs) {
        {
            AnyGenerator warm = make_generator(spec, seed);
            (void)take_bits(warm, bits);
        }
        double best = 0.0;
        for (int r = 0; r < repeats; ++r) {
            const auto t0 = Clock::now();
            AnyGenerator g = make_generator(spec, seed);
            const BitSeq out = take_bits(g, bits);
            const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
            if (out.size() != bits) throw InternalFault("bench generated a short stream");
            best = r == 0 ? secs : std::min(best, secs);
        }
        rows.push_back({to_string(spec.kind), bits, best, bits ? best * 1e9 / static_cast<double>(bits) : 0.0});
    }
    return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chaotic-iterations PRNG toolkit: generation, statistics and watermarking"};
    app.name("cirng");
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a bit stream");
    add_generator_options(g, gen.gen);
    g->add_option("--count,-n", gen.count, "number of bits")->required();
    gen.seed_opt = g->add_option("--seed", gen.seed, "integer seed (else CI_RAND_SEED, else the clock)");
    g->add_option("--format", gen.format, "ascii | binary")->capture_default_str();
    g->add_option("--output,-o", gen.output, "output file (default stdout)");
    g->add_option("--trace", gen.trace, "replay a recorded new CI trace instead of the XORshifts");

    TestArgs test;
    auto* t = app.add_subcommand("test", "run the five-test battery on a bit file");
    t->add_option("file", test.file, "bit file")->required();
    t->add_option("--format", test.format, "ascii | binary")->capture_default_str();
    t->add_option("--tests", test.tests, "subset of monobit serial poker runs autocorr")->delimiter(',');
    t->add_option("--alpha", test.alpha, "significance level")->capture_default_str();
    t->add_option("--poker-m", test.poker_m, "poker block size")->capture_default_str();
    t->add_option("--autocorr-d", test.autocorr_d, "autocorrelation shift")->capture_default_str();
    t->add_option("--csv", test.csv, "CSV report (default <file>.csv)");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "time the generators");
    b->add_option("--generators", bench.generators, "generators to time")->delimiter(',');
    b->add_option("--bits", bench.bits, "bits per run")->capture_default_str();
    b->add_option("--n-bits,-N", bench.n_bits, "state width for the CI generators")->capture_default_str();
    b->add_option("--repeats", bench.repeats, "timed runs per generator (best is reported)")->capture_default_str();
    b->add_option("--seed", bench.seed, "seed")->capture_default_str();
    b->add_option("--csv", bench.csv, "also write a CSV");

    NistArgs nist;
    auto* n = app.add_subcommand("nist-export", "write ASCII sequences for the NIST statistical test suite");
    add_generator_options(n, nist.gen);
    n->add_option("--dir", nist.dir, "output directory")->required();
    n->add_option("--count", nist.count, "number of sequences")->capture_default_str();
    n->add_option("--length", nist.length, "bits per sequence")->capture_default_str();
    nist.seed_opt = n->add_option("--seed", nist.seed, "base seed");
    n->add_flag("--serial", nist.serial, "disable OpenMP");

    EmbedArgs emb;
    auto* e = app.add_subcommand("wm-embed", "embed a watermark");
    e->add_option("--cover", emb.cover, "PGM cover (default: built-in 256x256 carrier)");
    e->add_option("--watermark", emb.watermark, "PBM watermark (default: built-in 64x64 mark)");
    e->add_option("--key", emb.key, "key file")->required();
    e->add_option("--output,-o", emb.output, "stego PGM")->required();

    ExtractArgs ext;
    auto* x = app.add_subcommand("wm-extract", "extract a watermark");
    x->add_option("--image", ext.image, "stego PGM")->required();
    x->add_option("--key", ext.key, "key file")->required();
    x->add_option("--original", ext.original, "cover PGM (switch mode)");
    x->add_option("--reference", ext.reference, "PBM to score against; also fixes the size");
    x->add_option("--width", ext.width, "watermark width")->capture_default_str();
    x->add_option("--height", ext.height, "watermark height")->capture_default_str();
    x->add_option("--output,-o", ext.output, "extracted PBM");

    AttackArgs att;
    auto* at = app.add_subcommand("wm-attack", "attack sweep; CSV of mean similarities");
    at->add_option("--attack", att.attack, "crop | rotate | jpeg | gauss")->required();
    at->add_option("--levels", att.levels, "intensities (crop px, degrees, quality, sigma)")->delimiter(',');
    at->add_option("--keys", att.keys, "keys to average over")->capture_default_str();
    at->add_option("--key-seed", att.key_seed, "first key seed")->capture_default_str();
    at->add_option("--mix", att.mix, "ci | xor")->capture_default_str();
    at->add_option("--mode", att.mode, "subst | switch")->capture_default_str();
    at->add_option("--cover", att.cover, "PGM cover (default: built-in carrier)");
    at->add_option("--watermark", att.watermark, "PBM watermark (default: built-in mark)");
    at->add_option("--csv", att.csv, "CSV path (default stdout)");
    at->add_flag("--bilinear", att.bilinear, "bilinear resampling for rotation");
    at->add_flag("--unwatermarked", att.unwatermarked, "attack the bare cover (control run)");
    at->add_flag("--serial", att.serial, "disable OpenMP");

    ExperimentArgs exp;
    auto* ex = app.add_subcommand("experiment", "reproduce an experiment as CSV");
    ex->add_option("which", exp.which, "fig1 | fig2 | fig3 | fig4 | tables | period")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "tables", "period"}));
    ex->add_option("--out", exp.out_dir, "directory for CSV files (default stdout)");
    exp.seed_opt = ex->add_option("--seed", exp.seed, "seed");
    ex->add_option("--count", exp.count, "states / sequences / pairs (experiment default if 0)");
    ex->add_option("--length", exp.length, "bits per sequence (experiment default if 0)");
    ex->add_option("--n-bits,-N", exp.n_bits, "state width (experiment default if 0)");
    ex->add_flag("--slow", exp.slow, "allow the full period walk");
    ex->add_flag("--serial", exp.serial, "disable OpenMP");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& pe) {
        return app.exit(pe, out, err);
    }

    try {
        if (*g) return cmd_gen(gen, out, err);
        if (*t) return cmd_test(test, out);
        if (*b) return cmd_bench(bench, out);
        if (*n) return cmd_nist(nist, out, err);
        if (*e) return cmd_wm_embed(emb, out);
        if (*x) return cmd_wm_extract(ext, out);
        if (*at) return cmd_wm_attack(att, out);
        if (*ex) return cmd_experiment(exp, out, err);
    } catch (const std::exception& ex_) {
        err << "error: " << ex_.what() << '\n';
        return 1;
    }
    return 1;
}

} // namespace cirng::cli
