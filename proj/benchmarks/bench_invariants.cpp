#include "pineta/enumerate.hpp"

#include <benchmark/benchmark.h>

using namespace pineta;

static void BM_eta_fixed_points(benchmark::State& state) {
    FamilyDescriptor f = FamilyDescriptor::case_ii(101, 4);
    for (auto _ : state) benchmark::DoNotOptimize(eta_via_fixed_points(f));
}
BENCHMARK(BM_eta_fixed_points);

static void BM_classify_sweep(benchmark::State& state) {
    std::vector<FamilyDescriptor> descs;
    for (long long k = -101; k <= 101; k += 2) descs.push_back(FamilyDescriptor::case_i(k, 2));
    SignConvention plus = SignConvention::plus();
    for (auto _ : state)
        for (const FamilyDescriptor& f : descs) benchmark::DoNotOptimize(classify(f, plus));
}
BENCHMARK(BM_classify_sweep);

static void BM_moduli_table(benchmark::State& state) {
    DiffeoType t = DiffeoType::parse("X4");
    for (auto _ : state)
        benchmark::DoNotOptimize(
            build_moduli_table(t, SignConvention::plus(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_moduli_table)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
