#include <random>

#include <benchmark/benchmark.h>

#include "flatbound/bands.hpp"
#include "flatbound/boundary.hpp"
#include "flatbound/catalog.hpp"
#include "flatbound/linalg.hpp"

using namespace flatbound;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-9, 9);
  IntMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = d(rng);
  return A;
}

void BM_SmithForm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const IntMatrix A = random_matrix(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithForm)->Arg(3)->Arg(5)->Arg(8);

void BM_FormIsometries(benchmark::State& state) {
  CatalogParams p;
  p.style = static_cast<LatticeStyle>(state.range(0));
  const QuadraticForm q = build_group("T3", p).form();
  for (auto _ : state) benchmark::DoNotOptimize(form_isometries(q));
}
BENCHMARK(BM_FormIsometries)->DenseRange(0, 2);

void BM_Fingerprint(benchmark::State& state, const char* name) {
  const SpaceGroup sg = build_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(sg));
}
BENCHMARK_CAPTURE(BM_Fingerprint, B4, "B4");
BENCHMARK_CAPTURE(BM_Fingerprint, HW10, "HW10");

void BM_Decide(benchmark::State& state, const char* name) {
  const SpaceGroup sg = build_group(name);
  for (auto _ : state) benchmark::DoNotOptimize(decide_admissible(sg));
}
BENCHMARK_CAPTURE(BM_Decide, C2, "C2")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decide, C6, "C6")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decide, HW1, "HW1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Decide, HW7, "HW7")->Unit(benchmark::kMillisecond);

void BM_Glue(benchmark::State& state) {
  const FlatBand a = build_band("TK"), b = build_band("TKr");
  for (auto _ : state) benchmark::DoNotOptimize(glue(a, b));
}
BENCHMARK(BM_Glue);

}  // namespace
BENCHMARK_MAIN();
