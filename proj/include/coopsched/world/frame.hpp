#pragma once

#include <cstdint>
#include <vector>

#include "coopsched/core/types.hpp"
#include "coopsched/world/geometry.hpp"

namespace coopsched::world {

enum class EntityKind { kCar, kPedestrian };

struct Vehicle {
  std::uint32_t id = 0;
  Vec2 center;
  double heading = 0.0;
  double length = 4.5;
  double width = 1.8;
  bool is_cov = false;

  OrientedRect footprint() const { return {center, heading, length, width}; }
  friend bool operator==(const Vehicle&, const Vehicle&) = default;
};

struct Pedestrian {
  std::uint32_t id = 0;
  Vec2 position;
  double heading = 0.0;
  double length = 0.6;
  double width = 0.6;

  OrientedRect footprint() const { return {position, heading, length, width}; }
  friend bool operator==(const Pedestrian&, const Pedestrian&) = default;
};

/// One slot of bird's-eye-view state.
struct WorldFrame {
  Slot slot = 0;
  std::vector<Vehicle> vehicles;
  std::vector<Pedestrian> pedestrians;
  std::uint32_t ego_id = 0;

  const Vehicle& ego() const;
  const Vehicle* find_vehicle(std::uint32_t id) const;

  /// Throws std::invalid_argument naming the broken invariant: exactly one
  /// ego, unique ids per kind, finite coordinates, non-degenerate footprints.
  void validate() const;

  friend bool operator==(const WorldFrame&, const WorldFrame&) = default;
};

/// Static map plus the frame sequence. Frames have contiguous slots.
struct Trace {
  std::vector<Rect> buildings;
  std::vector<WorldFrame> frames;

  friend bool operator==(const Trace&, const Trace&) = default;
};

}  // namespace coopsched::world
