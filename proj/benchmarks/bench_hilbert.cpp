#include <benchmark/benchmark.h>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/hyperbolicity.hpp"
#include "hilbert/john.hpp"
#include "hilbert/local_geometry.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/spectrum.hpp"
#include "hilbert/suite.hpp"

using namespace hilbert;

namespace {

const SuiteBody& body(int index) {
  static const std::vector<SuiteBody> suite = regressionSuite();
  return suite[static_cast<std::size_t>(index)];
}

void BM_Distance(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  const Vec& p = s.basePoints[1];
  const Vec& q = s.basePoints[3];
  for (auto _ : state) benchmark::DoNotOptimize(hilbertDistance(s.body, p, q));
  state.SetLabel(s.id);
}
BENCHMARK(BM_Distance)->DenseRange(0, 7);

void BM_FinslerNorm(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  const Vec v = Vec::Ones(s.body.dim());
  for (auto _ : state) benchmark::DoNotOptimize(finslerNorm(s.body, s.basePoints[2], v));
  state.SetLabel(s.id);
}
BENCHMARK(BM_FinslerNorm)->DenseRange(0, 7);

void BM_Density(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbertDensity(s.body, s.basePoints[2]).h);
  state.SetLabel(s.id);
}
BENCHMARK(BM_Density)->Arg(0)->Arg(2)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_JohnEllipsoid(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(johnEllipsoid(s.body).volume());
  state.SetLabel(s.id);
}
BENCHMARK(BM_JohnEllipsoid)->Arg(1)->Arg(2)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MetricBall(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(metricBall(s.body, s.basePoints[3], 1.0).size());
  state.SetLabel(s.id);
}
BENCHMARK(BM_MetricBall)->Arg(2)->Arg(6)->Unit(benchmark::kMicrosecond);

void BM_Theorem12Planar(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theorem12(s.body, s.basePoints[2]).pass());
  state.SetLabel(s.id);
}
BENCHMARK(BM_Theorem12Planar)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_RayleighDisk(benchmark::State& state) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  QuotientOptions o;
  o.samples = state.range(0);
  const TrialFunction f = TrialFunction::exponential(disk, Vec::Zero(2), 0.3, 8.0);
  for (auto _ : state) benchmark::DoNotOptimize(rayleighQuotient(f, o).quotient.value);
}
BENCHMARK(BM_RayleighDisk)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);

void BM_DeltaProbe(benchmark::State& state) {
  const SuiteBody& s = body(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deltaProbe(s.body, s.center, {4.0}, 1000, 42).front().maxDefect);
  state.SetLabel(s.id);
}
BENCHMARK(BM_DeltaProbe)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
