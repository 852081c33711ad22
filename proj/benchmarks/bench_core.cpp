#include "sti/angles.hpp"
#include "sti/criterion.hpp"
#include "sti/hyptrig.hpp"
#include "sti/integrate.hpp"
#include "sti/rng.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

void BM_SolveTriangle(benchmark::State& state) {
  sti::SplitMix64 rng(1);
  std::vector<sti::AngleTriple> triples;
  while (triples.size() < 1024) {
    const double a = sti::kPi * rng.uniform_open();
    const double b = sti::kPi * rng.uniform_open();
    const double c = sti::kPi * rng.uniform_open();
    if (auto t = sti::AngleTriple::try_make(a, b, c)) triples.push_back(*t);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sti::solve_triangle(triples[k++ & 1023]));
  }
}
BENCHMARK(BM_SolveTriangle);

void BM_ZeroCurve(benchmark::State& state) {
  const double g = 1.4;
  double a = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sti::z_of_alpha(g, a));
    a = a < 1.3 ? a + 1e-3 : 0.01;
  }
}
BENCHMARK(BM_ZeroCurve);

void BM_FailureArea(benchmark::State& state) {
  const auto inner = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sti::failure_area(1.3, inner));
}
BENCHMARK(BM_FailureArea)->Arg(256)->Arg(2048);

void BM_Probability(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sti::probability(n, n, 1));
}
BENCHMARK(BM_Probability)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
