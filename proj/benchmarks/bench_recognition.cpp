#include <benchmark/benchmark.h>

#include "equimatch/blowup.hpp"
#include "equimatch/families.hpp"
#include "equimatch/io.hpp"
#include "equimatch/recognition.hpp"

using namespace equimatch;

namespace {

Graph f3_instance(int n) {
    FamilyParams p{FamilyId::F3, {}};
    p.values[ParamN] = n;
    p.values[ParamR] = 1;
    p.values[ParamS] = 1;
    return instantiate(p);
}

void BM_Recognize(benchmark::State& state) {
    Graph g = f3_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = recognize_nonbipartite(g);
        benchmark::DoNotOptimize(result.verdict);
    }
    state.SetItemsProcessed(state.iterations() * g.edge_count());
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Recognize)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_TwinContract(benchmark::State& state) {
    Graph g = f3_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto tc = twin_contract(g);
        benchmark::DoNotOptimize(tc.quotient.n);
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_TwinContract)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
    Graph g = f3_instance(static_cast<int>(state.range(0)));
    std::string line = to_graph6(g);
    for (auto _ : state) {
        Graph parsed = parse_graph6(line);
        benchmark::DoNotOptimize(parsed.n);
    }
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
    Graph g = f3_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto result = classify(g);
        benchmark::DoNotOptimize(result.verdict);
    }
    state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_Classify)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
