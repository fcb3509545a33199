// Serial against OpenMP kernels on catalog maps.
#include <benchmark/benchmark.h>

#include "pcent/bowen.hpp"
#include "pcent/catalog.hpp"
#include "pcent/kernels.hpp"
#include "pcent/symbolic.hpp"

using namespace pcent;

namespace {

const PcMap& tent() {
    static const PcMap m = catalog_get("tent").map;
    return m;
}

std::vector<double> level(int n) {
    SymbolicOptions opt;
    PointSet d = delta_n(tent(), n, opt);
    return {d.begin(), d.end()};
}

template <bool Parallel>
void BM_preimage_level(benchmark::State& state) {
    const auto targets = level(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto out = Parallel ? kernels::omp::preimage_level(tent(), targets, 1e-14)
                            : kernels::serial::preimage_level(tent(), targets, 1e-14);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(targets.size()));
}

template <bool Parallel>
void BM_removable_junctions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto cuts = level(n);
    cuts.erase(std::remove_if(cuts.begin(), cuts.end(), [](double x) { return x <= 0 || x >= 1; }), cuts.end());
    for (auto _ : state) {
        auto flags = Parallel ? kernels::omp::removable_junctions(tent(), cuts, n, 1e-9)
                              : kernels::serial::removable_junctions(tent(), cuts, n, 1e-9);
        benchmark::DoNotOptimize(flags.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cuts.size()));
}

template <bool Parallel>
void BM_bowen_cells(benchmark::State& state) {
    const SampleSet s = sample_region(tent(), RegionSet(tent().domain()), static_cast<int>(state.range(0)), 12);
    const auto table = kernels::serial::orbit_table(tent(), s.points, 12);
    std::vector<kernels::BowenCell> cells;
    for (double eps : {0.05, 0.02, 0.01}) {
        for (int n = 4; n <= 12; ++n) cells.push_back({n, eps});
    }
    for (auto _ : state) {
        auto r = Parallel ? kernels::omp::bowen_cells(table, cells) : kernels::serial::bowen_cells(table, cells);
        benchmark::DoNotOptimize(r.data());
    }
}

}  // namespace

BENCHMARK(BM_preimage_level<false>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_preimage_level<true>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_removable_junctions<false>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_removable_junctions<true>)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bowen_cells<false>)->Arg(2049)->Arg(8193)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bowen_cells<true>)->Arg(2049)->Arg(8193)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
