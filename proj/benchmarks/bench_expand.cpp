#include "clexp/angles.hpp"
#include "clexp/expand.hpp"
#include "clexp/oracle.hpp"
#include "clexp/snake.hpp"

#include "fixtures.hpp"

#include <benchmark/benchmark.h>

using namespace clexp;

namespace {

void BM_expand_backend(benchmark::State& state) {
    Triangulation t = fixtures::three_punctured_square();
    Backend b = static_cast<Backend>(state.range(0));
    ExpandOptions opt;
    opt.backend = b;
    for (auto _ : state) {
        Expansion e = cluster_variable(t, fixtures::delta3(), opt);
        benchmark::DoNotOptimize(e.value);
    }
}
BENCHMARK(BM_expand_backend)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_matchings_long_strip(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Triangulation t = fixtures::polygon_fan(m);
    fixtures::DiskTriangulation dt{t, m, {}};
    ArcSpec d = fixtures::disk_arc(dt, 2, m);
    TPolygon tp = build_plain(t, d);
    for (auto _ : state) {
        auto ms = enumerate_matchings(tp);
        benchmark::DoNotOptimize(ms.size());
    }
}
BENCHMARK(BM_matchings_long_strip)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

void BM_snake_pms_long_strip(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    Triangulation t = fixtures::polygon_fan(m);
    fixtures::DiskTriangulation dt{t, m, {}};
    SnakeGraph g = build_snake(build_plain(t, fixtures::disk_arc(dt, 2, m)));
    for (auto _ : state) {
        auto pms = enumerate_pm(g);
        benchmark::DoNotOptimize(pms.size());
    }
}
BENCHMARK(BM_snake_pms_long_strip)->DenseRange(8, 14, 2)->Unit(benchmark::kMicrosecond);

void BM_mutation_closure_a3(benchmark::State& state) {
    Triangulation t = fixtures::polygon_fan(6);
    Seed s = Seed::initial(t.exchange_matrix());
    for (auto _ : state) {
        Closure cl = mutation_closure(s, 10);
        benchmark::DoNotOptimize(cl.variables.size());
    }
}
BENCHMARK(BM_mutation_closure_a3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
