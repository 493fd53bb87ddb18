#include <benchmark/benchmark.h>

#include "parcurve/parcurve.hpp"

using namespace parcurve;

static void BM_Length_Ellipse(benchmark::State& state) {
  auto ellipse = make_ellipse(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(length(ellipse.curve()));
}
BENCHMARK(BM_Length_Ellipse);

static void BM_ParallelLength_Smooth(benchmark::State& state) {
  OffsetSpec spec(make_ellipse(2.0, 1.0), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(parallel_length(spec));
}
BENCHMARK(BM_ParallelLength_Smooth);

static void BM_ParallelLength_Kinked(benchmark::State& state) {
  // eps past the min radius of curvature: four kinks to locate and split at
  OffsetSpec spec(make_ellipse(2.0, 1.0), 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(parallel_length(spec));
}
BENCHMARK(BM_ParallelLength_Kinked);

static void BM_RotationIndex_Limacon(benchmark::State& state) {
  auto limacon = make_limacon(2.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(rotation_index(limacon));
}
BENCHMARK(BM_RotationIndex_Limacon);

static void BM_ArcLengthInverse(benchmark::State& state) {
  ArcLengthMap map(make_ellipse(2.0, 1.0).curve());
  const double total = map.total();
  double s = 0.0;
  for (auto _ : state) {
    s += 0.37;
    if (s > total) s -= total;
    benchmark::DoNotOptimize(map.inverse(s));
  }
}
BENCHMARK(BM_ArcLengthInverse);

static void BM_FindOffsetSingularities(benchmark::State& state) {
  OffsetSpec spec(make_ellipse(2.0, 1.0), 0.6);
  for (auto _ : state) benchmark::DoNotOptimize(find_offset_singularities(spec));
}
BENCHMARK(BM_FindOffsetSingularities);

BENCHMARK_MAIN();
