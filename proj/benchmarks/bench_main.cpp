#include <benchmark/benchmark.h>

#include <random>

#include "moddom/bounds.hpp"
#include "moddom/domination.hpp"
#include "moddom/families.hpp"
#include "moddom/graph6.hpp"
#include "moddom/products.hpp"

using namespace moddom;

namespace {
Graph family(const char* spec) { return generate(FamilySpec::parse(spec)); }
}  // namespace

static void BM_DominationNumberRandom(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const Graph g = random_connected_graph(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(domination_number(g).value.value());
}
BENCHMARK(BM_DominationNumberRandom)->Arg(16)->Arg(24)->Arg(32);

static void BM_SdctdNumberCycle(benchmark::State& state) {
    const Graph g = generate({FamilyKind::Cycle, static_cast<int>(state.range(0)), 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(sdctd_number(g).value.value());
}
BENCHMARK(BM_SdctdNumberCycle)->Arg(12)->Arg(24)->Arg(48);

static void BM_ModularProductBuild(benchmark::State& state) {
    const Graph p = family("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(modular_product(p, p).edge_count());
}
BENCHMARK(BM_ModularProductBuild);

static void BM_ProductDominationPetersen(benchmark::State& state) {
    const Graph p = family("petersen");
    for (auto _ : state)
        benchmark::DoNotOptimize(product_domination_number(p, p).value.value());
}
BENCHMARK(BM_ProductDominationPetersen);

static void BM_ProductDominationMatchingPath(benchmark::State& state) {
    const Graph g = family("kminusm:3");
    const Graph h = family("path:18");
    for (auto _ : state)
        benchmark::DoNotOptimize(product_domination_number(g, h).value.value());
}
BENCHMARK(BM_ProductDominationMatchingPath);

static void BM_BestUpperBound(benchmark::State& state) {
    const Graph g = family("path:12");
    const Graph h = family("complement:path:8");
    for (auto _ : state) benchmark::DoNotOptimize(best_upper_bound(g, h).upper.value());
}
BENCHMARK(BM_BestUpperBound);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    std::mt19937_64 rng(11);
    const Graph g = random_graph(rng, 30);
    for (auto _ : state) benchmark::DoNotOptimize(parse_graph6(emit_graph6(g)).order());
}
BENCHMARK(BM_Graph6RoundTrip);

BENCHMARK_MAIN();
