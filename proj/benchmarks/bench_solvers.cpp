#include <benchmark/benchmark.h>

#include "gerrysolve/algorithms.hpp"
#include "gerrysolve/generate.hpp"
#include "gerrysolve/reductions.hpp"

using namespace gerrysolve;

namespace {

ProblemInstance bench_instance(Variant variant, int voters, int districts, std::uint64_t seed) {
  RandomInstanceSpec spec;
  spec.variant = variant;
  spec.voters = voters;
  spec.districts = districts;
  spec.alternatives = 3;
  spec.seed = seed;
  spec.max_budget = 3;
  spec.pure_tree = true;
  return random_instance(spec);
}

void BM_Oracle(benchmark::State& state) {
  ProblemInstance inst = bench_instance(Variant::MRGM, static_cast<int>(state.range(0)), 3, 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact(inst));
}
BENCHMARK(BM_Oracle)->Arg(6)->Arg(8)->Arg(10);

void BM_BoundedMoves(benchmark::State& state) {
  ProblemInstance inst = bench_instance(Variant::MRGM, static_cast<int>(state.range(0)), 3, 12);
  int budget = static_cast<int>(inst.budget.integer_value());
  for (auto _ : state) benchmark::DoNotOptimize(solve_bounded_moves(inst, budget));
}
BENCHMARK(BM_BoundedMoves)->Arg(8)->Arg(12)->Arg(16);

void BM_TreeCuts(benchmark::State& state) {
  ProblemInstance inst = bench_instance(Variant::MGM, static_cast<int>(state.range(0)), 3, 13);
  for (auto _ : state) benchmark::DoNotOptimize(solve_tree_cuts(inst));
}
BENCHMARK(BM_TreeCuts)->Arg(10)->Arg(20)->Arg(40);

void BM_FixedDistricts(benchmark::State& state) {
  ProblemInstance inst = bench_instance(Variant::MRGM, static_cast<int>(state.range(0)), 3, 14);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mrgm_fixed_districts(inst));
}
BENCHMARK(BM_FixedDistricts)->Arg(6)->Arg(8)->Arg(10);

void BM_DynamicProgram(benchmark::State& state) {
  ProblemInstance inst = bench_instance(Variant::MRGM, static_cast<int>(state.range(0)), 3, 15);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mrgm_dp(inst));
}
BENCHMARK(BM_DynamicProgram)->Arg(8)->Arg(16)->Arg(32);

void BM_RgbGeneration(benchmark::State& state) {
  X3CInstance src{static_cast<int>(state.range(0)), {}};
  for (int a = 1; a + 2 <= src.universe_size; a += 3) src.sets.push_back({a, a + 1, a + 2});
  for (auto _ : state) benchmark::DoNotOptimize(x3c_to_rgb(src));
}
BENCHMARK(BM_RgbGeneration)->Arg(6)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
