#include <benchmark/benchmark.h>

#include <random>

#include "hp/catalog.hpp"
#include "hp/classes.hpp"
#include "hp/decompose.hpp"
#include "hp/series.hpp"
#include "hp/structure.hpp"

namespace {

using namespace hp;

OrderedStructure random_binary(int n, std::mt19937& rng) {
  std::vector<std::uint8_t> mat(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      mat[static_cast<std::size_t>(i * n + j)] = (i == j || (rng() & 1)) ? 1 : 0;
  std::vector<std::vector<std::uint8_t>> rel;
  rel.push_back(std::move(mat));
  return OrderedStructure(Signature::binary(1), n, std::move(rel));
}

void BM_Embeds(benchmark::State& state) {
  const auto needle = oscillation_window(static_cast<int>(state.range(0)), OscillationVariant::Plain);
  const auto hay = oscillation_window(12, OscillationVariant::Plain);
  for (auto _ : state) benchmark::DoNotOptimize(embeds(needle, hay));
}
BENCHMARK(BM_Embeds)->Arg(4)->Arg(6)->Arg(8);

void BM_Decompose(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<OrderedStructure> pool;
  for (int i = 0; i < 64; ++i) pool.push_back(random_binary(static_cast<int>(state.range(0)), rng));
  std::size_t at = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(pool[at]));
    at = (at + 1) % pool.size();
  }
}
BENCHMARK(BM_Decompose)->Arg(6)->Arg(10);

void BM_EnumerateSeparable(benchmark::State& state) {
  const std::vector<OrderedStructure> basis{
      perm_to_bichain(Permutation({1, 3, 0, 2})),   // 2413
      perm_to_bichain(Permutation({2, 0, 3, 1}))};  // 3142
  for (auto _ : state) {
    const auto levels =
        enumerate_avoiders(Signature::bichain(), basis, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(levels.count(levels.max_n()));
  }
}
BENCHMARK(BM_EnumerateSeparable)->Arg(6)->Arg(7);

void BM_SimplePermutations(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(simple_permutations(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_SimplePermutations)->Arg(6)->Arg(7);

void BM_SolveSumClosure(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_sum_closure(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SolveSumClosure)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
