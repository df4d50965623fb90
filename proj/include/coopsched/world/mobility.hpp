#pragma once

#include <cstdint>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/world/frame.hpp"

namespace coopsched::world {

/// Manhattan grid with `grid_nodes` x `grid_nodes` signalised intersections
/// spaced `block_side_m` apart. Every street is bidirectional with two lanes
/// per direction (right-hand traffic) and a sidewalk on each side; blocks
/// between streets are buildings.
struct ManhattanParams {
  int grid_nodes = 4;
  double block_side_m = 200.0;
  double lane_width_m = 3.5;
  double sidewalk_width_m = 3.0;

  int n_cars = 200;
  double cov_ratio = 0.3;
  double speed_limit_kmh = 50.0;
  /// Desired speeds are drawn from U[min_speed_fraction, 1] * limit.
  double min_speed_fraction = 0.7;
  double turn_left_prob = 0.25;
  double turn_right_prob = 0.25;

  /// Pedestrian spawns per second over the whole map.
  double ped_arrival_rate = 0.2;
  double ped_speed_mps = 1.2;

  /// Green time per axis; the full cycle is twice this. 0 disables lights.
  double light_green_s = 30.0;

  double delta_t_s = 0.1;
  double warmup_s = 60.0;
  Slot slots = 1000;
  std::uint64_t seed = 1;
};

/// Road half-width (two lanes) plus sidewalk: distance from a street
/// centreline to the building faces.
double building_inset(const ManhattanParams& p);

std::vector<Rect> manhattan_buildings(const ManhattanParams& p);

/// Simulates the grid and records `slots` frames (slots 1..slots). Throws
/// std::invalid_argument for infeasible parameters.
Trace generate_manhattan_trace(const ManhattanParams& p);

}  // namespace coopsched::world
