// Serial references against their OpenMP versions, plus raw generator throughput.
// Thread count follows OMP_NUM_THREADS.

#include "cirng/par/parallel.hpp"

#include <benchmark/benchmark.h>

using namespace cirng;

namespace {

GeneratorFactory new_ci_factory() {
    return [](std::size_t run, bool decimated) {
        GeneratorSpec spec;
        spec.decimate = decimated;
        return make_generator(spec, 5000 + run);
    };
}

std::vector<SensitivityCase> sensitivity_cases(int n) {
    std::vector<SensitivityCase> cases;
    for (int i = 0; i < n; ++i) {
        const auto ts = seed_from_t(100 + static_cast<std::uint64_t>(i), 32);
        cases.push_back({{{ts.x0, ts.y0, ts.y0b}, {}}, 40});
    }
    return cases;
}

void BM_Generator(benchmark::State& state, GeneratorKind kind) {
    GeneratorSpec spec;
    spec.kind = kind;
    const auto bits = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        AnyGenerator gen = make_generator(spec, 484088);
        benchmark::DoNotOptimize(take_bits(gen, bits));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0) / 8);
}
BENCHMARK_CAPTURE(BM_Generator, xorshift, GeneratorKind::XorShift)->Arg(200'000);
BENCHMARK_CAPTURE(BM_Generator, logistic, GeneratorKind::Logistic)->Arg(200'000);
BENCHMARK_CAPTURE(BM_Generator, old_ci, GeneratorKind::OldCi)->Arg(200'000);
BENCHMARK_CAPTURE(BM_Generator, new_ci, GeneratorKind::NewCi)->Arg(200'000);

void BM_BalanceSerial(benchmark::State& state) {
    const auto make = new_ci_factory();
    for (auto _ : state) benchmark::DoNotOptimize(balance_experiment(make, 32, 50'000, true));
}
void BM_BalanceParallel(benchmark::State& state) {
    const auto make = new_ci_factory();
    for (auto _ : state) benchmark::DoNotOptimize(par::balance_experiment(make, 32, 50'000, true));
}
BENCHMARK(BM_BalanceSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BalanceParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SensitivitySerial(benchmark::State& state) {
    const auto cases = sensitivity_cases(20);
    for (auto _ : state) benchmark::DoNotOptimize(key_sensitivity_batch(cases, 20'000));
}
void BM_SensitivityParallel(benchmark::State& state) {
    const auto cases = sensitivity_cases(20);
    for (auto _ : state) benchmark::DoNotOptimize(par::key_sensitivity_batch(cases, 20'000));
}
BENCHMARK(BM_SensitivitySerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SensitivityParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_JpegSerial(benchmark::State& state) {
    const auto img = make_test_carrier(512, 512);
    for (auto _ : state) benchmark::DoNotOptimize(jpeg_like(img, 50));
}
void BM_JpegParallel(benchmark::State& state) {
    const auto img = make_test_carrier(512, 512);
    for (auto _ : state) benchmark::DoNotOptimize(par::jpeg_like(img, 50));
}
BENCHMARK(BM_JpegSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_JpegParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

SweepConfig crop_sweep() {
    SweepConfig cfg;
    cfg.kind = AttackKind::Crop;
    cfg.intensities = {10, 50, 100, 200};
    return cfg;
}
void BM_SweepSerial(benchmark::State& state) {
    const auto cover = make_test_carrier(256, 256);
    const auto wm = make_test_watermark();
    const std::vector<StegoKey> keys = {key_from_seed(1), key_from_seed(2), key_from_seed(3)};
    for (auto _ : state) benchmark::DoNotOptimize(attack_sweep(cover, wm, keys, crop_sweep()));
}
void BM_SweepParallel(benchmark::State& state) {
    const auto cover = make_test_carrier(256, 256);
    const auto wm = make_test_watermark();
    const std::vector<StegoKey> keys = {key_from_seed(1), key_from_seed(2), key_from_seed(3)};
    for (auto _ : state) benchmark::DoNotOptimize(par::attack_sweep(cover, wm, keys, crop_sweep()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
