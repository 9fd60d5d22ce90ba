// Construction throughput: the one-pass builder (serial and OpenMP), the
// recursive-halving baseline, and virtual-tree search vs std::lower_bound.
#include <benchmark/benchmark.h>
#include <malloc.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "flatbst/builder.hpp"
#include "flatbst/implicit.hpp"
#include "flatbst/oracle.hpp"
#include "flatbst/parallel.hpp"

namespace {

void bm_build_serial(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto tree = flatbst::build(n);
        benchmark::DoNotOptimize(tree.root);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(bm_build_serial)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

void bm_build_parallel(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const auto workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        const auto tree = flatbst::build_parallel(n, {}, workers);
        benchmark::DoNotOptimize(tree.root);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(bm_build_parallel)
    ->Args({1 << 20, 2})
    ->Args({1 << 20, 4})
    ->Args({1 << 24, 2})
    ->Args({1 << 24, 4})
    ->Args({1 << 24, 8});

void bm_build_halving(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        const auto tree = flatbst::build_halving(n);
        benchmark::DoNotOptimize(tree.root);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(bm_build_halving)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

void bm_virtual_search(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::vector<std::int64_t> keys(n);
    std::iota(keys.begin(), keys.end(), 0);
    std::int64_t probe = 1;
    for (auto _ : state) {
        probe = (probe * 48271) % static_cast<std::int64_t>(n);
        const auto outcome = flatbst::search<std::int64_t>(keys, probe);
        benchmark::DoNotOptimize(outcome.index);
    }
}
BENCHMARK(bm_virtual_search)->Arg(1 << 16)->Arg(1 << 24);

void bm_lower_bound(benchmark::State& state) {
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::vector<std::int64_t> keys(n);
    std::iota(keys.begin(), keys.end(), 0);
    std::int64_t probe = 1;
    for (auto _ : state) {
        probe = (probe * 48271) % static_cast<std::int64_t>(n);
        const auto it = std::lower_bound(keys.begin(), keys.end(), probe);
        benchmark::DoNotOptimize(it);
    }
}
BENCHMARK(bm_lower_bound)->Arg(1 << 16)->Arg(1 << 24);

}  // namespace

int main(int argc, char** argv) {
    // Recycle the output arrays through the heap across iterations; fresh
    // mmaps would make every builder look like kernel page-zeroing.
    mallopt(M_MMAP_THRESHOLD, 1 << 30);
    mallopt(M_TRIM_THRESHOLD, 1 << 30);
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
