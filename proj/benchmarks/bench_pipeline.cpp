#include <benchmark/benchmark.h>

#include <random>

#include "polecover/bounds.hpp"
#include "polecover/groups.hpp"
#include "polecover/realize.hpp"

namespace pc = polecover;

namespace {

pc::PermGroup psl27() {
  // z -> z + 1 and z -> -1/z on P^1(F_7), infinity = 7.
  return pc::PermGroup::generate(8, {pc::Permutation({1, 2, 3, 4, 5, 6, 0, 7}), pc::Permutation({7, 6, 3, 2, 5, 4, 1, 0})});
}

pc::PermGroup symmetric(std::size_t n) {
  std::vector<std::uint32_t> cycle(n);
  for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<std::uint32_t>(i);
  return pc::PermGroup::generate(n, {pc::Permutation::from_cycles(n, {{0, 1}}), pc::Permutation::from_cycles(n, {cycle})});
}

void BM_KleinPipeline(benchmark::State& state) {
  const auto g = psl27();
  for (auto _ : state) benchmark::DoNotOptimize(pc::realize_hurwitz(g));
}
BENCHMARK(BM_KleinPipeline)->Unit(benchmark::kMillisecond);

void BM_GroupClosure(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(symmetric(static_cast<std::size_t>(state.range(0))).order());
}
BENCHMARK(BM_GroupClosure)->Arg(4)->Arg(5)->Arg(6);

void BM_KernelAbelianization(benchmark::State& state) {
  const auto g = symmetric(5);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  std::vector<pc::Permutation> images = g.generators();
  while (images.size() < static_cast<std::size_t>(state.range(0))) images.push_back(g.elements()[pick(rng)]);
  for (auto _ : state) benchmark::DoNotOptimize(pc::kernel_abelianization(g, images));
}
BENCHMARK(BM_KernelAbelianization)->Arg(2)->Arg(4)->Arg(8);

void BM_Hnf(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> entry(-50, 50);
  std::vector<pc::IntegerVector> rows(n + 2, pc::IntegerVector(n));
  for (auto& r : rows)
    for (auto& x : r) x = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(pc::hnf(n, rows));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16);

void BM_MaxAdmissibleDegree(benchmark::State& state) {
  const long g = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(pc::max_admissible_degree(g, true));
}
BENCHMARK(BM_MaxAdmissibleDegree)->Arg(2)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
