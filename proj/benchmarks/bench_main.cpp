#include <benchmark/benchmark.h>

#include <cmath>

#include "dunkl/bessel_kingman.hpp"
#include "dunkl/dunkl_core.hpp"
#include "dunkl/rank_one.hpp"
#include "dunkl/simulation.hpp"
#include "dunkl/special_fn.hpp"
#include "dunkl/transform_mean.hpp"

using namespace dunkl;

static void BM_BesselJ(benchmark::State& state) {
  const BesselIndex a(1.5);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(a, x));
    x = x < 30.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselJ);

static void BM_DunklKernel2(benchmark::State& state) {
  const MultiplicityVector k({1.0, 0.5});
  const ComplexPoint x{cplx(0.0, 1.2), cplx(0.0, -0.7)};
  const ComplexPoint y{cplx(0.4), cplx(1.9)};
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_kernel(k, x, y));
}
BENCHMARK(BM_DunklKernel2);

static void BM_ConvolvePoints(benchmark::State& state) {
  const HypergroupIndex idx(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(convolve_points(idx, 1.0, 0.7, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ConvolvePoints)->Arg(24)->Arg(48)->Arg(96);

static void BM_HeatKernel(benchmark::State& state) {
  const MultiplicityVector k({1.0, 0.5});
  for (auto _ : state) benchmark::DoNotOptimize(heat_kernel(k, 0.5, {0.3, -1.0}, {1.1, 0.2}));
}
BENCHMARK(BM_HeatKernel);

static void BM_SphericalMeanRadial(benchmark::State& state) {
  const MultiplicityVector k({1.0, 0.5});
  auto f = [](double r) { return std::exp(-r * r); };
  for (auto _ : state) benchmark::DoNotOptimize(spherical_mean_radial(k, f, {1.0, 0.3}, 0.7));
}
BENCHMARK(BM_SphericalMeanRadial);

static void BM_DunklTransform(benchmark::State& state) {
  const MultiplicityVector k({1.0, 0.5});
  const GridFunction g = GridFunction::sample(dunkl_grid(k, 10.0, static_cast<int>(state.range(0))),
                                              [](const std::vector<double>& p) {
                                                return cplx(std::exp(-(p[0] * p[0] + p[1] * p[1]) / 2));
                                              });
  for (auto _ : state) benchmark::DoNotOptimize(dunkl_transform(k, g));
}
BENCHMARK(BM_DunklTransform)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_HeatTransition(benchmark::State& state) {
  const MultiplicityVector k({1.0, 0.5});
  Rng rng(1);
  Point x{0.4, -0.8};
  for (auto _ : state) {
    x = sample_heat_transition(k, x, 0.1, rng);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_HeatTransition);

BENCHMARK_MAIN();
