#include <benchmark/benchmark.h>

#include "extremal/constructions.hpp"
#include "extremal/counting.hpp"
#include "extremal/enumerate.hpp"
#include "extremal/formulas.hpp"
#include "extremal/hamilton.hpp"
#include "extremal/verify.hpp"

namespace {

using namespace extremal;

// Nonhamiltonian inputs force the search to exhaust the tree.
void BM_HamiltonianExtremal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = build_h(n, max_degree_bound(n));
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(g));
}
BENCHMARK(BM_HamiltonianExtremal)->Arg(9)->Arg(15)->Arg(25)->Arg(41);

void BM_HamiltonianCycleGraph(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_hamiltonian(g));
}
BENCHMARK(BM_HamiltonianCycleGraph)->Arg(16)->Arg(64);

void BM_StarEmbeddings(benchmark::State& state) {
  const Graph host = build_h(static_cast<int>(state.range(0)), 2);
  const Graph star = star_graph(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(count_labeled_embeddings(host, star));
}
BENCHMARK(BM_StarEmbeddings)->Args({10, 3})->Args({20, 4})->Args({30, 5});

void BM_PathEmbeddings(benchmark::State& state) {
  const Graph host = build_kprime(static_cast<int>(state.range(0)), 2);
  const Graph path = path_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_labeled_embeddings(host, path));
}
BENCHMARK(BM_PathEmbeddings)->Arg(12)->Arg(20);

void BM_Cliques(benchmark::State& state) {
  const Graph g = build_h(static_cast<int>(state.range(0)), 3);
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_cliques(g, k));
}
BENCHMARK(BM_Cliques)->Args({20, 3})->Args({30, 4})->Args({40, 5});

void BM_EnumerateClasses(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto s = enumerate_nonisomorphic(n);
    std::size_t count = 0;
    while (s->next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateClasses)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EdgeBoundSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_edge_bound(n, 1, GraphSource::internal(n)));
}
BENCHMARK(BM_EdgeBoundSweep)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
