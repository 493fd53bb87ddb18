#include <benchmark/benchmark.h>

#include "parcurve/parcurve.hpp"

using namespace parcurve;

static void BM_CountIntersections(benchmark::State& state) {
  const Polyline poly = sample_polyline(make_limacon(2.0, 1.0),
                                        static_cast<std::size_t>(state.range(0)));
  std::uint64_t i = 0;
  for (auto _ : state) {
    const Line line{0.4 * rng::uniform01(1, i), 3.0 * rng::uniform01(1, i + 1)};
    benchmark::DoNotOptimize(count_intersections(poly, line));
    i += 2;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountIntersections)->Arg(1024)->Arg(4096);

static void BM_CroftonLength(benchmark::State& state) {
  const Polyline poly = sample_polyline(make_circle(1.0),
                                        static_cast<std::size_t>(state.range(0)));
  CroftonOptions opts;
  opts.threads = 1;
  for (auto _ : state)
    benchmark::DoNotOptimize(crofton_length(poly, 100000, 7, opts));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_CroftonLength)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

static void BM_CroftonLength_Threads(benchmark::State& state) {
  const Polyline poly = sample_polyline(make_circle(1.0), 1024);
  CroftonOptions opts;
  opts.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(crofton_length(poly, 500000, 7, opts));
  state.SetItemsProcessed(state.iterations() * 500000);
}
BENCHMARK(BM_CroftonLength_Threads)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_EstimateRotationIndex(benchmark::State& state) {
  auto circle = make_circle(2.0);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(estimate_rotation_index(circle, 0.5, 100000, seed++, 1024));
}
BENCHMARK(BM_EstimateRotationIndex)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
