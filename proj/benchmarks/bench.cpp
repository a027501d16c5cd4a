#include <benchmark/benchmark.h>

#include <numbers>

#include "aw/curvature.hpp"
#include "aw/euler.hpp"
#include "aw/pinching.hpp"

namespace {

using namespace aw;

void BM_VolumeDensity(benchmark::State& state) {
  const ReductiveSplit split = build_split(WpqIndex::make(1, 1));
  EulerAnglesSU3 an;
  an.phi = 1.1;
  an.theta = 0.9;
  an.psi = 2.3;
  an.xi = 1.2;
  an.alpha = 3.0;
  an.beta = 0.8;
  an.gamma = 1.7;
  an.tau = 2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(volume_density(an, MetricSpec::killing(), split));
  }
}
BENCHMARK(BM_VolumeDensity);

void BM_MaurerCartanFrame(benchmark::State& state) {
  EulerAnglesSU3 an;
  an.phi = 1.1;
  an.theta = 0.9;
  an.psi = 2.3;
  an.xi = 1.2;
  an.alpha = 3.0;
  an.beta = 0.8;
  an.gamma = 1.7;
  an.tau = 2.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maurer_cartan_frame(an));
  }
}
BENCHMARK(BM_MaurerCartanFrame);

void BM_GroupCurvature(benchmark::State& state) {
  const ReductiveSplit split = build_split(WpqIndex::make(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_curvature(MetricSpec::wallach_w(), split));
  }
}
BENCHMARK(BM_GroupCurvature);

void BM_BaseCurvatureOperator(benchmark::State& state) {
  const WpqIndex idx = WpqIndex::make(1, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(base_curvature_operator(idx));
  }
}
BENCHMARK(BM_BaseCurvatureOperator);

void BM_ExtremizeSectional(benchmark::State& state) {
  const WpqIndex idx = WpqIndex::make(1, 1);
  const long budget = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(extremize_sectional(idx, budget, 1));
  }
}
BENCHMARK(BM_ExtremizeSectional)->Arg(100)->Arg(1000);

void BM_LambdaHat(benchmark::State& state) {
  const PinchCoefficients co = coefficients(WpqIndex::make(7, 11));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_hat(co));
  }
}
BENCHMARK(BM_LambdaHat);

void BM_PinchClosedForm(benchmark::State& state) {
  const WpqIndex idx = WpqIndex::make(7, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pinch(idx, 0));
  }
}
BENCHMARK(BM_PinchClosedForm);

}  // namespace

BENCHMARK_MAIN();
