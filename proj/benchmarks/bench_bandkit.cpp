// Microbenchmarks for the hot paths: single-root BFS width, the all-roots
// sweep, CM ordering, pattern reordering, and the exact search on small
// inputs.

#include <benchmark/benchmark.h>

#include "bandkit/bfs_width.hpp"
#include "bandkit/cuthill_mckee.hpp"
#include "bandkit/exact_bandwidth.hpp"
#include "bandkit/generators.hpp"
#include "bandkit/matrix_pattern.hpp"

namespace {

using namespace bandkit;

void bm_bfsw_from_banded(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_banded(n, 3, 0.5, 11).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfsw_from(g, 0));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(bm_bfsw_from_banded)->Arg(1'000)->Arg(10'000)->Arg(100'000);

void bm_all_roots_sweep(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_banded(n, 3, 0.5, 11).graph;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_width_per_root(g));
  }
}
BENCHMARK(bm_all_roots_sweep)->Arg(1'000)->Arg(4'000);

void bm_cuthill_mckee_level_tree(benchmark::State& state) {
  const LevelTree t = level_tree(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cuthill_mckee(t.graph, t.root));
  }
}
BENCHMARK(bm_cuthill_mckee_level_tree)->Arg(8)->Arg(12)->Arg(16);

void bm_reorder_pattern(benchmark::State& state) {
  const LevelTree t = level_tree(3, static_cast<int>(state.range(0)));
  const MatrixPattern p = MatrixPattern::from_graph(t.graph);
  const LinearLayout cm = cuthill_mckee(t.graph, t.root);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reorder_pattern(p, cm));
  }
}
BENCHMARK(bm_reorder_pattern)->Arg(6)->Arg(10);

void bm_exact_bandwidth_cycle(benchmark::State& state) {
  const Graph g = baseline(BaselineKind::cycle, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_bandwidth(g));
  }
}
BENCHMARK(bm_exact_bandwidth_cycle)->Arg(8)->Arg(12)->Arg(16);

void bm_level_tree_build(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(level_tree(3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(bm_level_tree_build)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
