#include <benchmark/benchmark.h>

#include "sgisect/circuit.hpp"
#include "sgisect/families.hpp"
#include "sgisect/reductions.hpp"
#include "sgisect/solvers.hpp"
#include "sgisect/varieties.hpp"

namespace sgisect {
namespace {

// x1, x1 -> x2, ..., x(k-1) -> xk, not xk: unsatisfiable, so the search
// exhausts.
CnfFormula chain(std::size_t k) {
  std::vector<Clause> clauses;
  for (std::uint32_t v = 1; v < k; ++v) clauses.push_back({Literal{v, false}, Literal{v + 1, true}});
  clauses.push_back({Literal{1, true}});
  clauses.push_back({Literal{static_cast<std::uint32_t>(k), false}});
  return CnfFormula::make(k, clauses);
}

void BM_BruteForceUnbounded(benchmark::State& state) {
  const auto inst = reduce_unbounded(chain(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(inst));
}
BENCHMARK(BM_BruteForceUnbounded)->DenseRange(2, 6);

void BM_LiSolveNilpotent(benchmark::State& state) {
  const auto inst = reduce_nilpotent(chain(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(li_solve(inst));
}
BENCHMARK(BM_LiSolveNilpotent)->DenseRange(2, 5);

void BM_LiDegreeMinCap(benchmark::State& state) {
  const auto s = families::min_cap(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(li_degree(s));
}
BENCHMARK(BM_LiDegreeMinCap)->RangeMultiplier(2)->Range(4, 64);

void BM_SlpImagePower(benchmark::State& state) {
  auto s = share(families::cyclic(7));
  const Morphism h(s, {1, 2});
  const auto g = power_slp(Slp::canonical(Word{0, 1}, 2), BigInt(1) << state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(slp_image(g, h));
}
BENCHMARK(BM_SlpImagePower)->RangeMultiplier(4)->Range(16, 1024);

void BM_SlpToCircuit(benchmark::State& state) {
  auto s = share(families::min_cap(state.range(0)));
  const Morphism h(s, {0, 1});
  const auto g = power_slp(Slp::canonical(Word{0, 1}, 2), 1000);
  for (auto _ : state) benchmark::DoNotOptimize(slp_to_circuit(g, h));
}
BENCHMARK(BM_SlpToCircuit)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
}  // namespace sgisect

BENCHMARK_MAIN();
