#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "coopsched/core/rng.hpp"
#include "coopsched/harness/sweep.hpp"
#include "coopsched/harness/tape.hpp"
#include "coopsched/rmab/reflected_walk.hpp"
#include "coopsched/rmab/well_behaved.hpp"
#include "coopsched/world/lidar.hpp"
#include "coopsched/world/mobility.hpp"

using namespace coopsched;

namespace {

struct Scene {
  std::vector<world::Rect> buildings;
  std::vector<world::Vehicle> vehicles;
  std::vector<world::ScanTarget> targets;
  world::Sensor sensor;
};

Scene make_scene(int vehicles) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-80.0, 80.0);
  std::uniform_real_distribution<double> ang(-world::kPi, world::kPi);
  Scene s;
  s.buildings = world::manhattan_buildings(world::ManhattanParams{});
  for (auto& b : s.buildings) {
    b.x_min -= 300.0;
    b.x_max -= 300.0;
    b.y_min -= 300.0;
    b.y_max -= 300.0;
  }
  for (int i = 0; i < vehicles; ++i) {
    const auto id = static_cast<std::uint32_t>(i + 1);
    s.vehicles.push_back({id, {pos(rng), pos(rng)}, ang(rng), 4.5, 1.8, false});
    s.targets.push_back({s.vehicles.back().footprint(), id});
  }
  s.sensor = {{0.0, 0.0}, 0.3, 0};
  return s;
}

void BM_ScanFast(benchmark::State& state) {
  const Scene s = make_scene(static_cast<int>(state.range(0)));
  const world::LidarSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(world::scan_targets(spec, {s.buildings, s.vehicles}, s.sensor, s.targets));
  }
}
BENCHMARK(BM_ScanFast)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_ScanReference(benchmark::State& state) {
  const Scene s = make_scene(static_cast<int>(state.range(0)));
  const world::LidarSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(world::scan_targets_reference(spec, {s.buildings, s.vehicles}, s.sensor, s.targets));
  }
}
BENCHMARK(BM_ScanReference)->Arg(10)->Unit(benchmark::kMillisecond);

std::vector<double> walk_path(double sigma, std::size_t n) {
  rmab::GainProcess g(0.5, sigma, 3);
  std::vector<double> path(n);
  for (auto& x : path) x = g.step();
  return path;
}

void BM_WellBehavedPruned(benchmark::State& state) {
  const double sigma = 0.05;
  const auto path = walk_path(sigma, static_cast<std::size_t>(state.range(0)));
  const double c_f = rmab::well_behaved_constant(sigma);
  for (auto _ : state) benchmark::DoNotOptimize(rmab::path_well_behaved(path, c_f, sigma));
}
BENCHMARK(BM_WellBehavedPruned)->Arg(801)->Arg(5001)->Unit(benchmark::kMicrosecond);

void BM_WellBehavedReference(benchmark::State& state) {
  const double sigma = 0.05;
  const auto path = walk_path(sigma, static_cast<std::size_t>(state.range(0)));
  const double c_f = rmab::well_behaved_constant(sigma);
  for (auto _ : state) benchmark::DoNotOptimize(rmab::path_well_behaved_reference(path, c_f, sigma));
}
BENCHMARK(BM_WellBehavedReference)->Arg(801)->Arg(5001)->Unit(benchmark::kMicrosecond);

struct SweepFixture {
  harness::ExperimentConfig cfg;
  std::vector<harness::Tape> tapes;
  std::vector<harness::ParamPoint> points;
  SweepFixture() {
    cfg.slots = 2000;
    cfg.seeds = {1, 2, 3, 4};
    cfg.population.sigma = 0.1;
    cfg.population.arrival_rate = 0.02;
    cfg.population.mean_lifetime = 250.0;
    cfg.population.v_max = 5;
    tapes = harness::make_tapes(cfg, cfg.seeds);
    points = harness::sweep_points(cfg);
  }
};

void BM_Sweep(benchmark::State& state) {
  static const SweepFixture f;
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(harness::run_sweep(f.tapes, f.cfg.seeds, f.points, parallel));
  state.SetLabel(parallel ? "openmp" : "serial");
}
BENCHMARK(BM_Sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
