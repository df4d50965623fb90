#include "coopsched/world/lidar.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopsched::world {

namespace {

constexpr double kDeg = kPi / 180.0;

struct Interval {
  double lo;
  double hi;
};

// Bearing span of a rectangle's corners relative to `ref`.
Interval bearing_span(const std::array<Vec2, 4>& corners, Vec2 origin, double ref) {
  Interval iv{kPi, -kPi};
  for (const Vec2& c : corners) {
    const Vec2 d = c - origin;
    const double a = wrap_angle(std::atan2(d.y, d.x) - ref);
    iv.lo = std::min(iv.lo, a);
    iv.hi = std::max(iv.hi, a);
  }
  return iv;
}

double farthest_corner(const std::array<Vec2, 4>& corners, Vec2 origin) {
  double far = 0.0;
  for (const Vec2& c : corners) far = std::max(far, norm(c - origin));
  return far;
}

}  // namespace

int LidarSpec::azimuth_rays() const { return static_cast<int>(std::lround(360.0 / azimuth_res_deg)); }

void LidarSpec::validate() const {
  if (channels < 2) throw std::invalid_argument("lidar channels must be at least 2");
  if (!(vfov_deg > 0.0 && vfov_deg < 180.0)) throw std::invalid_argument("lidar vfov must lie in (0, 180)");
  if (!(max_range_m > 0.0)) throw std::invalid_argument("lidar max range must be positive");
  if (!(azimuth_res_deg > 0.0 && azimuth_res_deg <= 360.0)) {
    throw std::invalid_argument("lidar azimuth resolution must lie in (0, 360]");
  }
  if (!(object_height_m > 0.0)) throw std::invalid_argument("object height must be positive");
  if (!(delta_t_s > 0.0)) throw std::invalid_argument("delta_t must be positive");
  if (!(data_rate_64ch_bps > 0.0)) throw std::invalid_argument("lidar data rate must be positive");
}

Vec2 ray_direction(const LidarSpec& spec, double heading, int k) {
  return unit(heading + k * (spec.azimuth_res_deg * kDeg));
}

int vertical_channels(const LidarSpec& spec, double distance_m) {
  const double step = spec.vfov_deg / (spec.channels - 1);
  int n = 0;
  for (int k = 0; k < spec.channels; ++k) {
    const double theta = (-0.5 * spec.vfov_deg + k * step) * kDeg;
    const double h = spec.mount_height_m + distance_m * std::tan(theta);
    if (h >= 0.0 && h <= spec.object_height_m) ++n;
  }
  return n;
}

int raycast_points(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                   const ScanTarget& target) {
  const Vec2 o = sensor.position;
  const OrientedRect& tr = target.footprint;
  if (contains(tr, o)) return 0;
  const double d = distance_to(tr, o);
  if (d > spec.max_range_m) return 0;
  const int n_vert = vertical_channels(spec, d);
  if (n_vert == 0) return 0;

  const Vec2 to_c = tr.center - o;
  const double ref = std::atan2(to_c.y, to_c.x);
  const auto corners = tr.corners();
  const Interval span = bearing_span(corners, o, ref);
  const double far = std::min(spec.max_range_m, farthest_corner(corners, o));
  const double res = spec.azimuth_res_deg * kDeg;
  const Interval window{span.lo - res, span.hi + res};

  auto relevant = [&](const OrientedRect& r) {
    if (contains(r, o) || distance_to(r, o) > far) return false;
    const Interval iv = bearing_span(r.corners(), o, ref);
    return iv.hi >= window.lo && iv.lo <= window.hi;
  };
  std::vector<OrientedRect> occ;
  for (const Rect& b : scene.buildings) {
    const OrientedRect r = as_oriented(b);
    if (relevant(r)) occ.push_back(r);
  }
  for (const Vehicle& v : scene.vehicles) {
    if (v.id == sensor.vehicle_id || v.id == target.vehicle_id) continue;
    const OrientedRect r = v.footprint();
    if (relevant(r)) occ.push_back(r);
  }

  const int n_rays = spec.azimuth_rays();
  const double kc = wrap_angle(ref - sensor.heading) / res;
  long k_lo = static_cast<long>(std::floor(kc + span.lo / res)) - 1;
  long k_hi = static_cast<long>(std::ceil(kc + span.hi / res)) + 1;
  if (k_hi - k_lo + 1 >= n_rays) {
    k_lo = 0;
    k_hi = n_rays - 1;
  }
  int n_az = 0;
  for (long k = k_lo; k <= k_hi; ++k) {
    const int kk = static_cast<int>(((k % n_rays) + n_rays) % n_rays);
    const Vec2 dir = ray_direction(spec, sensor.heading, kk);
    const auto t = ray_entry(tr, o, dir);
    if (!t || *t > spec.max_range_m) continue;
    bool blocked = false;
    for (const auto& r : occ) {
      const auto to = ray_entry(r, o, dir);
      if (to && *to <= *t) {
        blocked = true;
        break;
      }
    }
    if (!blocked) ++n_az;
  }
  return n_az * n_vert;
}

std::vector<int> scan_targets(const LidarSpec& spec, const LidarScene& scene, const Sensor& sensor,
                              std::span<const ScanTarget> targets) {
  std::vector<int> out(targets.size(), 0);
  const auto n = static_cast<long>(targets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = raycast_points(spec, scene, sensor, targets[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace coopsched::world
