#include <benchmark/benchmark.h>

#include <random>

#include "arcsys/annular.hpp"
#include "arcsys/annulus.hpp"
#include "arcsys/constructions.hpp"
#include "arcsys/extremal.hpp"
#include "arcsys/taut.hpp"

using namespace arcsys;

static void BM_IntersectionNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto cl = enumerate_classes(SurfaceSpec(n), 5);
  std::mt19937 rng(1);
  for (auto _ : state) {
    const auto& a = cl[rng() % cl.size()];
    const auto& b = cl[rng() % cl.size()];
    benchmark::DoNotOptimize(intersection_number(a, b));
  }
}
BENCHMARK(BM_IntersectionNumber)->Arg(5)->Arg(7);

static void BM_MinimalPosition(benchmark::State& state) {
  ArcSystem sys = max_two_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_position(sys.classes).total_crossings());
}
BENCHMARK(BM_MinimalPosition)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SearchMax(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_max(5, 2, static_cast<int>(state.range(0))).witness.size());
}
BENCHMARK(BM_SearchMax)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HexagonMove(benchmark::State& state) {
  AnnularDiagram d;
  for (const auto& t : enumerate_taut_annulus_diagrams(5, 1, 1))
    if (!hexagon_loci(t.diagram).empty()) {
      d = t.diagram;
      break;
    }
  std::mt19937 rng(2);
  for (auto _ : state) {
    auto loci = hexagon_loci(d);
    d = hexagon_move(d, loci[rng() % loci.size()]);
  }
}
BENCHMARK(BM_HexagonMove);

static void BM_CornerTheorem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_corner_theorem(4, 1).ok());
}
BENCHMARK(BM_CornerTheorem)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
