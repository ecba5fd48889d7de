// Serial reference vs OpenMP kernels.

#include "powersub/catalog.hpp"
#include "powersub/subgroups.hpp"
#include "powersub/theorems.hpp"

#include <benchmark/benchmark.h>

using namespace powersub;

namespace {

GroupTable bench_group(std::int64_t which) {
    switch (which) {
    case 0: return make_symmetric(4);
    case 1: return make_elementary_abelian(2, 5);
    case 2: return direct_product(make_dihedral(4), make_elementary_abelian(2, 3));
    default: return make_alternating(5);
    }
}

void BM_SubgroupsSerial(benchmark::State& state) {
    const auto g = bench_group(state.range(0));
    state.SetLabel(g.name());
    for (auto _ : state) benchmark::DoNotOptimize(all_subgroups_serial(g));
}

void BM_SubgroupsParallel(benchmark::State& state) {
    const auto g = bench_group(state.range(0));
    state.SetLabel(g.name());
    for (auto _ : state) benchmark::DoNotOptimize(all_subgroups(g));
}

void BM_VerifySerial(benchmark::State& state) {
    const auto tables = catalog_tables(build_catalog(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(run_all(tables, {.parallel = false}));
}

void BM_VerifyParallel(benchmark::State& state) {
    const auto tables = catalog_tables(build_catalog(static_cast<std::size_t>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(run_all(tables, {.parallel = true}));
}

} // namespace

BENCHMARK(BM_SubgroupsSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SubgroupsParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
