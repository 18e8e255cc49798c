#include <benchmark/benchmark.h>

#include "convlab/duality.hpp"
#include "convlab/fixtures.hpp"
#include "convlab/lab/enumerate.hpp"
#include "convlab/maps.hpp"

using namespace convlab;

static void BM_EnumerateConvergences(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lab::count(n, lab::SpaceClass::convergence));
}
BENCHMARK(BM_EnumerateConvergences)->Arg(2)->Arg(3);

static void BM_EnumerateTopologies(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lab::count(4, lab::SpaceClass::topology));
}
BENCHMARK(BM_EnumerateTopologies);

static void BM_Reflect(benchmark::State& state) {
  const Convergence xi = fixtures::np3();
  const auto tag = static_cast<FunctorTag>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reflect(xi, tag));
}
BENCHMARK(BM_Reflect)
    ->Arg(static_cast<int>(FunctorTag::S0))
    ->Arg(static_cast<int>(FunctorTag::S))
    ->Arg(static_cast<int>(FunctorTag::T));

static void BM_ProductSierBour(benchmark::State& state) {
  const Convergence a = fixtures::sierpinski();
  const Convergence b = fixtures::bourdaud();
  for (auto _ : state) benchmark::DoNotOptimize(product(a, b));
}
BENCHMARK(BM_ProductSierBour);

static void BM_ClassifyStrictnessWitness(benchmark::State& state) {
  const SpaceMap m = fixtures::quotient_not_hereditarily_quotient();
  for (auto _ : state) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_ClassifyStrictnessWitness);

static void BM_DualSier(benchmark::State& state) {
  const Convergence xi = fixtures::pt3();
  for (auto _ : state) benchmark::DoNotOptimize(dual(xi, fixtures::sierpinski()));
}
BENCHMARK(BM_DualSier);

// NP3 has 22 continuous maps into BOUR, so the hull streams 2^22 kernels.
static void BM_EpiBourNP3(benchmark::State& state) {
  const Convergence xi = fixtures::np3();
  const Convergence bour = fixtures::bourdaud();
  for (auto _ : state) benchmark::DoNotOptimize(epi(xi, bour));
}
BENCHMARK(BM_EpiBourNP3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
