#include <benchmark/benchmark.h>

#include <numbers>

#include "proxfield/field.hpp"
#include "proxfield/grid.hpp"
#include "proxfield/mesh.hpp"
#include "proxfield/planner.hpp"

using namespace proxfield;

namespace {

Scene single_person() {
  Person p;
  p.height = 1.75;
  return Scene({p});
}

Scene three_persons() {
  Person a;
  a.height = 1.75;
  Person b;
  b.position = {2.0, 1.0};
  b.orientation = std::numbers::pi;
  b.height = 1.60;
  Person c;
  c.position = {-1.5, 2.0};
  c.orientation = 1.0;
  c.height = 1.90;
  return Scene({a, b, c});
}

}  // namespace

static void BM_ZDiscomfort(benchmark::State& state) {
  const ZDiscomfortModel model(build_region_table(1.75));
  double z = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model(z));
    z += 1e-4;
    if (z > 3.2) z = 0.0;
  }
}
BENCHMARK(BM_ZDiscomfort);

static void BM_AgfEval(benchmark::State& state) {
  AgfParams params;
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(agf_eval(params, x, 0.3 * x));
    x += 1e-4;
    if (x > 3.0) x = -3.0;
  }
}
BENCHMARK(BM_AgfEval);

static void BM_PersonFieldConstruction(benchmark::State& state) {
  Person p;
  p.height = 1.75;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PersonField(p, {}));
  }
}
BENCHMARK(BM_PersonFieldConstruction);

static void BM_ScenePointEval(benchmark::State& state) {
  const Scene scene = three_persons();
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scene.discomfort(x, 0.5, 1.4));
    x += 1e-4;
    if (x > 3.0) x = -3.0;
  }
}
BENCHMARK(BM_ScenePointEval);

static void BM_SampleGrid(benchmark::State& state) {
  const Scene scene = single_person();
  GridSpec spec;
  spec.min = {-2.0, -2.0, 0.0};
  spec.max = {2.0, 2.0, 3.0};
  spec.resolution = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_grid(scene, spec));
  }
}
BENCHMARK(BM_SampleGrid)->Unit(benchmark::kMillisecond);

static void BM_MarchingCubes(benchmark::State& state) {
  const Scene scene = single_person();
  GridSpec spec;
  spec.min = {-3.0, -3.0, 0.0};
  spec.max = {3.0, 3.0, 3.0};
  spec.resolution = 0.05;
  const Field3D field = sample_grid(scene, spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(marching_cubes(field, 0.5));
  }
}
BENCHMARK(BM_MarchingCubes)->Unit(benchmark::kMillisecond);

static void BM_PlanPath(benchmark::State& state) {
  Person blocker;
  blocker.position = {2.5, 0.0};
  blocker.orientation = std::numbers::pi / 2.0;
  const Scene scene({blocker});
  PlanRequest request;
  request.grid.min = {-0.5, -2.0, 0.0};
  request.grid.max = {5.5, 2.0, 3.0};
  request.grid.resolution = 0.25;
  request.start = {0.0, 0.0, 1.0};
  request.goal = {5.0, 0.0, 1.0};
  request.lambda = 20.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan_path(scene, request));
  }
}
BENCHMARK(BM_PlanPath)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
