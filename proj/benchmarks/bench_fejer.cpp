// Microbenchmarks for the hot paths: series evaluation, the smooth and
// peaked quadrature routes, one full checker, and the special functions the
// closed forms are phrased in.

#include <benchmark/benchmark.h>

#include "fejer/checkers.hpp"
#include "fejer/constants.hpp"
#include "fejer/extremal.hpp"
#include "fejer/function_model.hpp"
#include "fejer/quadrature.hpp"

namespace {

using namespace fejer;

const QuadratureConfig kCfg{};

HarmonicSeries sample_series(int degree) {
  CorpusSpec spec;
  spec.count = 1;
  spec.degree = degree;
  spec.seed = 11;
  return generate_corpus(spec)[0].primary;
}

void BM_BoundaryEval(benchmark::State& state) {
  const HarmonicSeries f = sample_series(static_cast<int>(state.range(0)));
  double theta = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(f.boundary_eval(theta));
    theta += 1e-3;
  }
}
BENCHMARK(BM_BoundaryEval)->Arg(4)->Arg(12)->Arg(32);

void BM_CircleIntegral(benchmark::State& state) {
  const DiskFunction f = disk_function(sample_series(12));
  for (auto _ : state) benchmark::DoNotOptimize(circle_integral(f, 2.0, kCfg));
}
BENCHMARK(BM_CircleIntegral);

void BM_DiameterIntegral(benchmark::State& state) {
  const DiskFunction f = disk_function(sample_series(12));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_integral(f, 0.0, 1.5, kCfg));
}
BENCHMARK(BM_DiameterIntegral);

void BM_CheckHarmonic(benchmark::State& state) {
  const DiskFunction f = disk_function(sample_series(12));
  for (auto _ : state) benchmark::DoNotOptimize(check_harmonic(f, 1.5, 0.7, kCfg));
}
BENCHMARK(BM_CheckHarmonic);

// r = 1 - 1/arg: the peaked-partition path of circle_integral.
void BM_PeakedCircle(benchmark::State& state) {
  const double r = 1.0 - 1.0 / static_cast<double>(state.range(0));
  const DiskFunction f = disk_function(ExtremalFamily{2.0, r});
  for (auto _ : state) benchmark::DoNotOptimize(circle_integral(f, 2.0, kCfg));
}
BENCHMARK(BM_PeakedCircle)->Arg(10)->Arg(1000);

void BM_EllipticK(benchmark::State& state) {
  double k = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(elliptic_K(k));
    k = k < 0.99 ? k + 1e-4 : 0.0;
  }
}
BENCHMARK(BM_EllipticK);

// eps = 1/arg: thinner rectangles push the prevertex solve into the
// long-double regime.
void BM_RectmapSolve(benchmark::State& state) {
  const double eps = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rectmap_solve(eps, kCfg));
}
BENCHMARK(BM_RectmapSolve)->Arg(10)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
