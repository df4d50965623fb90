#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "coopsched/world/frame.hpp"
#include "coopsched/world/geometry.hpp"

namespace coopsched::world {

struct LidarSpec {
  int channels = 64;
  double vfov_deg = 26.8;
  double max_range_m = 100.0;
  double azimuth_res_deg = 0.09;
  double mount_height_m = 1.9;
  double object_height_m = 1.7;
  double delta_t_s = 0.1;

  /// 64-channel sensor output rate; frames scale linearly with channel count.
  double data_rate_64ch_bps = 33.27e6;

  int azimuth_rays() const;
  double full_frame_bits() const { return data_rate_64ch_bps * delta_t_s * channels / 64.0; }
  void validate() const;
};

inline constexpr std::uint32_t kNoVehicle = std::numeric_limits<std::uint32_t>::max();

struct Sensor {
  Vec2 position;
  double heading = 0.0;
  std::uint32_t vehicle_id = kNoVehicle;
};

struct ScanTarget {
  OrientedRect footprint;
  std::uint32_t vehicle_id = kNoVehicle;
};

/// Buildings and vehicles that may block rays. Vehicles matching the sensor
/// or the target id are skipped, as is any occluder containing the sensor.
struct LidarScene {
  std::span<const Rect> buildings;
  std::span<const Vehicle> vehicles;
};

/// Unit direction of azimuth ray k; both scan paths share it.
Vec2 ray_direction(const LidarSpec& spec, double heading, int k);

/// Channels whose beam height at horizontal distance d lies on the object.
int vertical_channels(const LidarSpec& spec, double distance_m);

/// Fast path: only rays inside the target's angular interval are traced,
/// against occluders pre-filtered by range and bearing.
int raycast_points(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                   const ScanTarget& target);

/// Brute force: every ray, every occluder, edge-by-edge intersection.
int raycast_points_reference(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                             const ScanTarget& target);

/// Point counts for many targets; OpenMP across targets.
std::vector<int> scan_targets(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                              std::span<const ScanTarget> targets);
std::vector<int> scan_targets_reference(const LidarSpec& spec, const LidarScene& scene,
                                        const Sensor& sensor, std::span<const ScanTarget> targets);

}  // namespace coopsched::world
