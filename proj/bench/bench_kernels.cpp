#include <benchmark/benchmark.h>

#include "vguard/generator.hpp"
#include "vguard/pipeline.hpp"
#include "vguard/polygon.hpp"
#include "vguard/verification.hpp"

namespace {

vguard::PolygonWithHoles instance(std::size_t outer, std::size_t holes) {
  return vguard::generate({.seed = 7, .outer_vertices = outer, .holes = holes, .hole_vertices = 4});
}

void BM_VisibilitySerial(benchmark::State& state) {
  const auto poly = instance(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(vguard::visibility_graph_serial(poly));
}

void BM_VisibilityParallel(benchmark::State& state) {
  const auto poly = instance(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(vguard::visibility_graph(poly));
}

void BM_CoverageSerial(benchmark::State& state) {
  const auto poly = instance(static_cast<std::size_t>(state.range(0)), 3);
  const auto guards = vguard::place_guards(poly).guards;
  for (auto _ : state) benchmark::DoNotOptimize(vguard::boundary_coverage_serial(poly, guards));
}

void BM_CoverageParallel(benchmark::State& state) {
  const auto poly = instance(static_cast<std::size_t>(state.range(0)), 3);
  const auto guards = vguard::place_guards(poly).guards;
  for (auto _ : state) benchmark::DoNotOptimize(vguard::boundary_coverage(poly, guards));
}

}  // namespace

BENCHMARK(BM_VisibilitySerial)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VisibilityParallel)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageSerial)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverageParallel)->Arg(12)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
