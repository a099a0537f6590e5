#include <benchmark/benchmark.h>

#include <random>

#include "distidx/canon.hpp"
#include "distidx/enumerate.hpp"
#include "distidx/families.hpp"
#include "distidx/indices.hpp"
#include "distidx/invariants.hpp"
#include "distidx/verify.hpp"

using namespace distidx;

namespace {

Graph random_graph(int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

void BM_Distances(benchmark::State& state) {
  const Graph g = random_graph(int(state.range(0)), 0.1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(DistanceMatrix(g));
}
BENCHMARK(BM_Distances)->Arg(16)->Arg(32)->Arg(64);

void BM_WienerFamily(benchmark::State& state) {
  const Graph g = random_graph(int(state.range(0)), 0.1, 2);
  const DistanceMatrix d(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wiener(d));
    benchmark::DoNotOptimize(hyper_wiener(d));
    benchmark::DoNotOptimize(weighted_szeged(g, d));
  }
}
BENCHMARK(BM_WienerFamily)->Arg(16)->Arg(64);

void BM_Canonical(benchmark::State& state) {
  const Graph g = random_graph(int(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_Canonical)->Arg(9)->Arg(16)->Arg(32);

void BM_CanonicalRegular(benchmark::State& state) {
  const Graph g = cycle(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalRegular)->Arg(12)->Arg(24);

void BM_Matching(benchmark::State& state) {
  const Graph g = random_graph(int(state.range(0)), 0.08, 4);
  for (auto _ : state) benchmark::DoNotOptimize(matching_number(g));
}
BENCHMARK(BM_Matching)->Arg(16)->Arg(64);

void BM_Independence(benchmark::State& state) {
  const Graph g = random_graph(int(state.range(0)), 0.2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(independence_number(g));
}
BENCHMARK(BM_Independence)->Arg(16)->Arg(32);

void BM_Trees(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    for_each_tree(n, {}, [&](const Graph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Trees)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ConnectedGraphs(benchmark::State& state) {
  const int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_connected_graphs(n));
}
BENCHMARK(BM_ConnectedGraphs)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_WszScan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_wsz_conjecture(int(state.range(0))));
  }
}
BENCHMARK(BM_WszScan)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
