// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "toric/danilov.hpp"
#include "toric/fan.hpp"
#include "toric/lattice_points.hpp"

using namespace toric;

namespace {

// Tilted slab cut by two more halfspaces; unbounded along one direction.
Polyhedron slab() {
  std::vector<Halfspace> hs{
      {{Int(3), Int(-4), Int(-6)}, Int(-5)},
      {{Int(0), Int(6), Int(-4)}, Int(-2)},
      {{Int(7), Int(-2), Int(3)}, Int(3)},
      {{Int(-1), Int(0), Int(0)}, Int(-40)},
  };
  return Polyhedron(3, hs);
}

Execution mode(const benchmark::State& s) { return s.range(1) ? Execution::parallel : Execution::serial; }

void BM_BoxPointsSpan(benchmark::State& state) {
  const Polyhedron p = slab();
  for (auto _ : state) benchmark::DoNotOptimize(box_points_span(p, state.range(0), mode(state)));
}
BENCHMARK(BM_BoxPointsSpan)->ArgsProduct({{16, 64, 256}, {0, 1}})->ArgNames({"radius", "omp"})->Unit(benchmark::kMillisecond);

void BM_FindH1Witness(benchmark::State& state) {
  const Fan fan = build_payne_fan();
  const Sublattice m = Sublattice::standard(3);
  for (auto _ : state) benchmark::DoNotOptimize(find_h1_witness(fan, m, state.range(0), mode(state)));
}
BENCHMARK(BM_FindH1Witness)->ArgsProduct({{1, 2}, {0, 1}})->ArgNames({"radius", "omp"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
