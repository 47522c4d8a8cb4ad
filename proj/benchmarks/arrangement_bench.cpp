#include <benchmark/benchmark.h>

#include "tilecount/arrangement.hpp"
#include "tilecount/planar_graph.hpp"
#include "tilecount/render.hpp"

using namespace tilecount;

static void BM_SplitAllReference(benchmark::State& state) {
    const auto base = base_segments(PolygonSpec(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto split = split_all(base);
        benchmark::DoNotOptimize(split);
    }
    state.counters["E"] = static_cast<double>(split_all(base).size());
}
BENCHMARK(BM_SplitAllReference)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_SplitAllFast(benchmark::State& state) {
    const auto base = base_segments(PolygonSpec(static_cast<int>(state.range(0))));
    for (auto _ : state) {
        auto split = split_all_fast(base);
        benchmark::DoNotOptimize(split);
    }
}
BENCHMARK(BM_SplitAllFast)->Arg(8)->Arg(16)->Arg(24)->Arg(32)->Arg(39)->Unit(benchmark::kMillisecond);

static void BM_CountVertices(benchmark::State& state) {
    const auto split = split_all_fast(base_segments(PolygonSpec(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(count_vertices(split));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(2 * split.size()));
}
BENCHMARK(BM_CountVertices)->Arg(16)->Arg(39)->Unit(benchmark::kMillisecond);

static void BM_EnumerateFaces(benchmark::State& state) {
    const auto graph = build_graph(split_all_fast(base_segments(PolygonSpec(static_cast<int>(state.range(0))))));
    for (auto _ : state) {
        auto faces = enumerate_faces(graph);
        benchmark::DoNotOptimize(faces);
    }
}
BENCHMARK(BM_EnumerateFaces)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_RenderSvg(benchmark::State& state) {
    const auto split = split_all_fast(base_segments(PolygonSpec(static_cast<int>(state.range(0)))));
    for (auto _ : state) benchmark::DoNotOptimize(render_svg(split, nullptr, {}));
}
BENCHMARK(BM_RenderSvg)->Arg(12)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
