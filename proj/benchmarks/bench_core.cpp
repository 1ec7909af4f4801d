#include <benchmark/benchmark.h>

#include <hyptree/dp.hpp>
#include <hyptree/greedy.hpp>
#include <hyptree/problems.hpp>
#include <hyptree/rules.hpp>

using namespace hyptree;

static void BM_BuildSortingTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto table = build_sorting_table(n);
    benchmark::DoNotOptimize(table.row_count());
  }
}
BENCHMARK(BM_BuildSortingTable)->Arg(4)->Arg(5)->Arg(6);

static void BM_Restrict(benchmark::State& state) {
  auto table = build_sorting_table(6);
  auto sub = full_subtable(table);
  std::size_t a = 0;
  for (auto _ : state) {
    auto child = restrict_by(sub, a, 1);
    benchmark::DoNotOptimize(child.members.count());
    a = (a + 1) % table.attribute_count();
  }
}
BENCHMARK(BM_Restrict);

static void BM_ExactSweep(benchmark::State& state) {
  // all five types, both cost models, one shared engine
  const int n = static_cast<int>(state.range(0));
  auto table = build_sorting_table(n);
  for (auto _ : state) {
    DpEngine engine(table);
    std::int64_t acc = 0;
    for (int k = 1; k <= 5; ++k) {
      acc += engine.optimal_cost(k, CostModel::Depth);
      acc += engine.optimal_cost(k, CostModel::RealizableNodes);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ExactSweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_ExactSweepMonotone(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto table = build_monotone_table(n);
  for (auto _ : state) {
    DpEngine engine(table);
    std::int64_t acc = 0;
    for (int k = 1; k <= 5; ++k) {
      acc += engine.optimal_cost(k, CostModel::Depth);
      acc += engine.optimal_cost(k, CostModel::RealizableNodes);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ExactSweepMonotone)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_GreedyTree(benchmark::State& state) {
  auto table = build_sorting_table(5);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto tree = greedy_tree(table, k);
    benchmark::DoNotOptimize(tree.node_count());
  }
}
BENCHMARK(BM_GreedyTree)->Arg(1)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_TreeRuleStats(benchmark::State& state) {
  auto table = build_sorting_table(5);
  auto tree = greedy_tree(table, 4);
  for (auto _ : state) {
    auto stats = tree_rule_stats(table, tree);
    benchmark::DoNotOptimize(stats.mean_min_length);
  }
}
BENCHMARK(BM_TreeRuleStats)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
