#include <benchmark/benchmark.h>

#include "chanorder/coding.hpp"
#include "chanorder/games.hpp"
#include "chanorder/geometry.hpp"
#include "chanorder/ordering.hpp"
#include "chanorder/random.hpp"
#include "chanorder/suites.hpp"

namespace {

using namespace chanorder;

void BM_SolveLpSimplexFeasibility(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  std::vector<std::vector<double>> gens(k);
  for (auto& g : gens) g = rng.simplex_point(6);
  const std::vector<double> q = rng.simplex_point(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_membership(q, gens));
  }
}
BENCHMARK(BM_SolveLpSimplexFeasibility)->Arg(8)->Arg(32)->Arg(128);

void BM_L1DistanceToHull(benchmark::State& state) {
  Rng rng(2);
  std::vector<std::vector<double>> gens(static_cast<std::size_t>(state.range(0)));
  for (auto& g : gens) g = rng.simplex_point(8);
  const std::vector<double> q = rng.simplex_point(8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(l1_distance_to_hull(q, gens));
  }
}
BENCHMARK(BM_L1DistanceToHull)->Arg(8)->Arg(64);

void BM_IsInputDegraded(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const DegradedPair pair = make_degraded_pair(n, n, 4, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_input_degraded(pair.w, pair.w_prime));
  }
}
BENCHMARK(BM_IsInputDegraded)->Arg(3)->Arg(5)->Arg(8);

void BM_SimilarityDistance(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Channel a = gen_random_channel(n, 4, 4);
  const Channel b = gen_random_channel(n, 4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(similarity_distance(a, b));
  }
}
BENCHMARK(BM_SimilarityDistance)->Arg(4)->Arg(8);

void BM_Capacity(benchmark::State& state) {
  const Channel w = gen_random_channel(static_cast<std::size_t>(state.range(0)), 4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity(w));
  }
}
BENCHMARK(BM_Capacity)->Arg(2)->Arg(4)->Arg(8);

void BM_CheckBss(benchmark::State& state) {
  const DegradedPair pair = make_degraded_pair(4, 4, 3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_bss(pair.w, pair.w_prime, 5, 11));
  }
}
BENCHMARK(BM_CheckBss);

void BM_PeOpt(benchmark::State& state) {
  const Channel w = gen_random_channel(3, 3, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pe_opt(w, 2, 3));
  }
}
BENCHMARK(BM_PeOpt);

}  // namespace

BENCHMARK_MAIN();
